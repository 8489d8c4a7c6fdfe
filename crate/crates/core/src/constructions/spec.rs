//! Construction descriptors and their string form, e.g. `W:d=3,k=3` or
//! `joinupper:d=8,n=40`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::*;
use crate::complex::FVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ConstructionSpec {
    W { d: usize, k: usize },
    X { d: usize, k: usize, j: usize },
    Y { d: usize, k: usize, j: usize },
    W4prime { k: usize },
    X4prime { k: usize, j: usize },
    Y4prime { k: usize, j: usize },
    Crosspolytope { d: usize },
    PolygonSuspension { d: usize, n: usize },
    JoinUpper { d: usize, n: usize },
    CyclicBoundary { d: usize, m: usize },
    NeighborlySubdivided { d: usize, m: usize },
}

use ConstructionSpec as S;

impl ConstructionSpec {
    fn tag(&self) -> &'static str {
        match self {
            S::W { .. } => "W",
            S::X { .. } => "X",
            S::Y { .. } => "Y",
            S::W4prime { .. } => "Wp",
            S::X4prime { .. } => "Xp",
            S::Y4prime { .. } => "Yp",
            S::Crosspolytope { .. } => "cross",
            S::PolygonSuspension { .. } => "polysusp",
            S::JoinUpper { .. } => "joinupper",
            S::CyclicBoundary { .. } => "cyclic",
            S::NeighborlySubdivided { .. } => "neighborly",
        }
    }

    fn params(&self) -> Vec<(char, usize)> {
        match *self {
            S::W { d, k } => vec![('d', d), ('k', k)],
            S::X { d, k, j } | S::Y { d, k, j } => vec![('d', d), ('k', k), ('j', j)],
            S::W4prime { k } => vec![('k', k)],
            S::X4prime { k, j } | S::Y4prime { k, j } => vec![('k', k), ('j', j)],
            S::Crosspolytope { d } => vec![('d', d)],
            S::PolygonSuspension { d, n } | S::JoinUpper { d, n } => vec![('d', d), ('n', n)],
            S::CyclicBoundary { d, m } | S::NeighborlySubdivided { d, m } => {
                vec![('d', d), ('m', m)]
            }
        }
    }

    /// File stem such as `W_d3_k3` or `Xp_k2_j1`.
    pub fn file_stem(&self) -> String {
        let mut s = self.tag().to_string();
        for (c, v) in self.params() {
            s.push_str(&format!("_{c}{v}"));
        }
        s
    }

    pub fn build(&self) -> Result<Complex> {
        match *self {
            S::W { d, k } => build_w(d, k),
            S::X { d, k, j } => build_x(d, k, j),
            S::Y { d, k, j } => build_y(d, k, j),
            S::W4prime { k } => build_w4_prime(k),
            S::X4prime { k, j } => build_x4_prime(k, j),
            S::Y4prime { k, j } => build_y4_prime(k, j),
            S::Crosspolytope { d } => crosspolytope(d),
            S::PolygonSuspension { d, n } => polygon_suspension(d, n),
            S::JoinUpper { d, n } => join_upper_family(d, n),
            S::CyclicBoundary { d, m } => cyclic_boundary(d, m),
            S::NeighborlySubdivided { d, m } => neighborly_subdivided(d, m),
        }
    }

    /// Number of vertices of the built complex, from the closed forms.
    pub fn vertex_count(&self) -> usize {
        match *self {
            S::W { d, k } => 2 + k * (2 * d - 2),
            S::X { d, k, j } => 2 + j + k * (2 * d - 2),
            S::Y { d, k, j } => 2 + (d - 1) + j + k * (2 * d - 2),
            S::W4prime { k } => 2 + 6 * k,
            S::X4prime { k, j } => 2 + j + 6 * k,
            S::Y4prime { k, j } => 5 + j + 6 * k,
            S::Crosspolytope { d } => 2 * d,
            S::PolygonSuspension { n, .. } | S::JoinUpper { n, .. } => n,
            S::CyclicBoundary { m, .. } => m,
            S::NeighborlySubdivided { d, m } => m + gale_facets(d, m).len(),
        }
    }

    /// Dimension `d` such that the construction is a `(d-1)`-sphere, when it is one.
    pub fn sphere_dim(&self) -> Option<usize> {
        match *self {
            S::W { d, .. } | S::X { d, .. } if d <= 3 => Some(d),
            S::Y { d: 3, .. } => Some(3),
            S::W { .. } | S::X { .. } | S::Y { .. } => None,
            S::W4prime { .. } | S::X4prime { .. } | S::Y4prime { .. } => Some(4),
            S::Crosspolytope { d }
            | S::PolygonSuspension { d, .. }
            | S::JoinUpper { d, .. }
            | S::CyclicBoundary { d, .. }
            | S::NeighborlySubdivided { d, .. } => Some(d),
        }
    }

    /// Whether the built complex is flag.
    pub fn is_flag_family(&self) -> bool {
        !matches!(self, S::CyclicBoundary { .. } | S::NeighborlySubdivided { .. })
    }

    /// The stable set number of the skeleton predicted by the closed forms,
    /// where one is known.
    pub fn expected_alpha(&self) -> Option<usize> {
        match *self {
            S::W { k, .. } | S::X { k, .. } | S::W4prime { k } | S::X4prime { k, .. } => Some(k + 1),
            S::Y { k, .. } | S::Y4prime { k, .. } => Some(k + 2),
            S::Crosspolytope { .. } => Some(2),
            S::PolygonSuspension { d, n } => Some((n - 2 * (d - 2)) / 2),
            S::JoinUpper { d, n } => {
                let plan = join_upper_plan(d, n).ok()?;
                let comp = plan.components.iter().filter_map(|c| c.expected_alpha()).max()?;
                Some(if plan.suspensions > 0 { comp.max(2) } else { comp })
            }
            S::CyclicBoundary { .. } | S::NeighborlySubdivided { .. } => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidSpec(format!("{self}: {why}")));
        match *self {
            S::W { d, k } if d < 2 || k < 1 => bad("needs d >= 2 and k >= 1"),
            S::X { d, k, j } if d < 2 || k < 1 || j > d - 1 => bad("needs d >= 2, k >= 1, 0 <= j <= d-1"),
            S::Y { d, k, j } if d < 3 || k < 1 || j < 1 || j > d - 1 => {
                bad("needs d >= 3, k >= 1, 1 <= j <= d-1")
            }
            S::W4prime { k } if k < 1 => bad("needs k >= 1"),
            S::X4prime { k, j } if k < 1 || j > 3 => bad("needs k >= 1, 0 <= j <= 3"),
            S::Y4prime { k, j } if k < 1 || !(1..=3).contains(&j) => bad("needs k >= 1, 1 <= j <= 3"),
            S::Crosspolytope { d } if d < 1 => bad("needs d >= 1"),
            S::PolygonSuspension { d, n } if d < 2 || n < 2 * d || n < 2 * (d - 2) + 4 => {
                bad("needs d >= 2 and n >= 2d")
            }
            S::JoinUpper { d, n } if d < 4 || n < 2 * d => bad("needs d >= 4 and n >= 2d"),
            S::CyclicBoundary { d, m } | S::NeighborlySubdivided { d, m } if d < 2 || m <= d => {
                bad("needs m > d >= 2")
            }
            _ => Ok(()),
        }
    }

    pub fn manifest(&self, k: &Complex) -> Manifest {
        Manifest {
            spec: self.to_string(),
            construction: *self,
            n: k.num_vertices(),
            f_vector: k.f_vector(),
            expected_alpha: self.expected_alpha(),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(c, v)| format!("{c}={v}")).collect();
        write!(f, "{}:{}", self.tag(), params.join(","))
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: String| Error::InvalidSpec(format!("`{s}`: {why}"));
        let (tag, rest) = s.split_once(':').ok_or_else(|| bad("expected `family:key=value,...`".into()))?;
        let mut params = BTreeMap::new();
        for kv in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = kv.split_once('=').ok_or_else(|| bad(format!("bad parameter `{kv}`")))?;
            let value: usize = value.trim().parse().map_err(|_| bad(format!("bad value in `{kv}`")))?;
            if params.insert(key.trim().to_string(), value).is_some() {
                return Err(bad(format!("duplicate parameter `{key}`")));
            }
        }
        let mut take = |key: &str| params.remove(key).ok_or_else(|| bad(format!("missing parameter `{key}`")));
        let spec = match tag.trim() {
            "W" => S::W { d: take("d")?, k: take("k")? },
            "X" => S::X { d: take("d")?, k: take("k")?, j: take("j")? },
            "Y" => S::Y { d: take("d")?, k: take("k")?, j: take("j")? },
            "Wp" => S::W4prime { k: take("k")? },
            "Xp" => S::X4prime { k: take("k")?, j: take("j")? },
            "Yp" => S::Y4prime { k: take("k")?, j: take("j")? },
            "cross" => S::Crosspolytope { d: take("d")? },
            "polysusp" => S::PolygonSuspension { d: take("d")?, n: take("n")? },
            "joinupper" => S::JoinUpper { d: take("d")?, n: take("n")? },
            "cyclic" => S::CyclicBoundary { d: take("d")?, m: take("m")? },
            "neighborly" => S::NeighborlySubdivided { d: take("d")?, m: take("m")? },
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        if let Some(extra) = params.keys().next() {
            return Err(bad(format!("unexpected parameter `{extra}`")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Summary written next to generated files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub spec: String,
    pub construction: ConstructionSpec,
    pub n: usize,
    pub f_vector: FVector,
    pub expected_alpha: Option<usize>,
}

/// The `X'`/`Y'` flag 3-sphere on exactly `n ≥ 8` vertices with the smallest
/// stable set number `⌈(n+1)/6⌉`: `X'(4,k,j)` when `n ≡ 2,3,4,5 (mod 6)`,
/// otherwise `Y'(4,k,j)`.
pub fn best_flag_3sphere(n: usize) -> Result<ConstructionSpec> {
    if n < 8 {
        return Err(Error::InvalidSpec(format!("no X'/Y' 3-sphere on {n} < 8 vertices")));
    }
    let j = (n - 2) % 6;
    if j <= 3 {
        return Ok(S::X4prime { k: (n - 2 - j) / 6, j });
    }
    let j = (n - 5) % 6;
    debug_assert!((1..=3).contains(&j));
    Ok(S::Y4prime { k: (n - 5 - j) / 6, j })
}

/// Component layout of the join construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinPlan {
    pub components: Vec<ConstructionSpec>,
    pub suspensions: usize,
}

/// `⌊d/4⌋` flag 3-spheres sharing `n - 2(d mod 4)` vertices as evenly as
/// possible (sizes differ by at most one, largest first), followed by
/// `d mod 4` suspensions. Every size is at least 8 because `n ≥ 2d`, and the
/// `X'`/`Y'` families realise every size from 8 on.
pub fn join_upper_plan(d: usize, n: usize) -> Result<JoinPlan> {
    if d < 4 || n < 2 * d {
        return Err(Error::InvalidSpec(format!("joinupper needs d >= 4 and n >= 2d, got d={d}, n={n}")));
    }
    let m = d / 4;
    let r = d % 4;
    let total = n - 2 * r;
    let components = (0..m)
        .map(|i| best_flag_3sphere(total / m + usize::from(i < total % m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(JoinPlan { components, suspensions: r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in [
            "W:d=3,k=3",
            "X:d=4,k=2,j=1",
            "Y:d=3,k=2,j=1",
            "Wp:k=2",
            "Xp:k=2,j=1",
            "Yp:k=1,j=3",
            "cross:d=5",
            "polysusp:d=4,n=12",
            "joinupper:d=8,n=40",
            "cyclic:d=4,m=7",
            "neighborly:d=4,m=7",
        ] {
            let spec: ConstructionSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("W:d=3,k=3".parse::<ConstructionSpec>().unwrap().file_stem(), "W_d3_k3");
        assert_eq!("Xp:k=2,j=1".parse::<ConstructionSpec>().unwrap().file_stem(), "Xp_k2_j1");
    }

    #[test]
    fn bad_strings() {
        for s in ["W", "W:d=3", "Q:d=3", "W:d=3,k=x", "W:d=3,k=1,j=0", "W:d=1,k=1", "cyclic:d=4,m=4", "W:d=3,d=3,k=1"] {
            assert!(matches!(s.parse::<ConstructionSpec>(), Err(Error::InvalidSpec(_))), "{s}");
        }
    }

    #[test]
    fn serde_tags() {
        let spec: ConstructionSpec = "Xp:k=2,j=1".parse().unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"family":"X4prime","k":2,"j":1}"#);
        assert_eq!(serde_json::from_str::<ConstructionSpec>(&json).unwrap(), spec);
    }

    #[test]
    fn closed_form_vertex_counts() {
        for s in ["W:d=3,k=3", "X:d=5,k=2,j=3", "Y:d=4,k=2,j=2", "Wp:k=3", "Xp:k=2,j=3", "Yp:k=2,j=1", "cross:d=4", "polysusp:d=3,n=10", "joinupper:d=5,n=16", "cyclic:d=4,m=8", "neighborly:d=4,m=7"] {
            let spec: ConstructionSpec = s.parse().unwrap();
            assert_eq!(spec.build().unwrap().num_vertices(), spec.vertex_count(), "{s}");
        }
    }

    #[test]
    fn best_3sphere_sizes() {
        for n in 8..60 {
            let spec = best_flag_3sphere(n).unwrap();
            assert_eq!(spec.vertex_count(), n);
            assert_eq!(spec.expected_alpha(), Some((n + 1).div_ceil(6)));
        }
        assert!(best_flag_3sphere(7).is_err());
    }

    #[test]
    fn join_plans() {
        let p = join_upper_plan(8, 40).unwrap();
        assert_eq!(p.suspensions, 0);
        assert_eq!(p.components.iter().map(|c| c.vertex_count()).collect::<Vec<_>>(), vec![20, 20]);
        let p = join_upper_plan(5, 16).unwrap();
        assert_eq!(p.suspensions, 1);
        assert_eq!(p.components[0].vertex_count(), 14);
        assert_eq!(S::JoinUpper { d: 5, n: 16 }.expected_alpha(), Some(3));
        assert_eq!(S::JoinUpper { d: 4, n: 14 }.expected_alpha(), Some(3));
        assert!(join_upper_plan(8, 15).is_err());
        // n = 2d is always feasible.
        for d in 4..=12 {
            join_upper_plan(d, 2 * d).unwrap();
        }
    }
}
