//! Simplicial complexes stored by their facets.
//!
//! Vertices are dense `u32` ids with a parallel label table. Every facet is a
//! sorted id list, facets are inclusion-maximal and kept in sorted order, so two
//! complexes built from the same label sets compare equal regardless of how
//! their ids were assigned.

mod io;

use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use io::{parse_facets, read_facets_file, write_facets, write_facets_file};

pub type Vertex = u32;

#[derive(Clone, Debug)]
pub struct Complex {
    facets: Vec<Vec<Vertex>>,
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
}

/// Face counts `(f_{-1}, f_0, ..., f_dim)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` for `i >= -1`; zero past the top dimension.
    pub fn f(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn vertices(&self) -> u64 {
        self.f(0)
    }

    pub fn edges(&self) -> u64 {
        self.f(1)
    }

    /// Alternating sum over non-empty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Complex {
    /// Builds a complex from facets given as label lists. Non-maximal sets are
    /// absorbed; ids are assigned in order of first appearance.
    pub fn from_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::InvalidInput("empty facet list".into()));
        }
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, Vertex> = HashMap::new();
        let mut raw = Vec::with_capacity(facets.len());
        for facet in facets {
            if facet.is_empty() {
                return Err(Error::InvalidInput("empty facet".into()));
            }
            let mut ids = Vec::with_capacity(facet.len());
            for l in facet {
                let l = l.as_ref();
                if l.is_empty() || l.chars().any(char::is_whitespace) {
                    return Err(Error::InvalidInput(format!("bad vertex label {l:?}")));
                }
                let id = *index.entry(l.to_string()).or_insert_with(|| {
                    labels.push(l.to_string());
                    (labels.len() - 1) as Vertex
                });
                ids.push(id);
            }
            raw.push(ids);
        }
        Ok(Self::from_parts(raw, labels))
    }

    /// Internal constructor: normalises facets (sorted, deduplicated,
    /// maximal) and drops labels of vertices that appear in no facet.
    pub(crate) fn from_parts(facets: Vec<Vec<Vertex>>, labels: Vec<String>) -> Self {
        let mut facets: Vec<Vec<Vertex>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        facets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();

        let max_len = facets.first().map_or(0, Vec::len);
        let mut kept: Vec<Vec<Vertex>> = Vec::with_capacity(facets.len());
        if facets.iter().all(|f| f.len() == max_len) {
            kept = facets;
        } else {
            // Facets are visited by decreasing size, so a subset test against
            // the kept facets through one vertex is enough.
            let mut by_vertex: HashMap<Vertex, Vec<usize>> = HashMap::new();
            for f in facets {
                let absorbed = match f.first() {
                    None => !kept.is_empty(),
                    Some(v) => by_vertex.get(v).is_some_and(|ks| {
                        ks.iter().any(|&k| kept[k].len() > f.len() && is_subset(&f, &kept[k]))
                    }),
                };
                if !absorbed {
                    for &v in &f {
                        by_vertex.entry(v).or_default().push(kept.len());
                    }
                    kept.push(f);
                }
            }
        }

        let mut used = vec![false; labels.len()];
        for f in &kept {
            for &v in f {
                used[v as usize] = true;
            }
        }
        let mut remap = vec![Vertex::MAX; labels.len()];
        let mut new_labels = Vec::new();
        for (old, l) in labels.into_iter().enumerate() {
            if used[old] {
                remap[old] = new_labels.len() as Vertex;
                new_labels.push(l);
            }
        }
        let mut facets: Vec<Vec<Vertex>> = kept
            .into_iter()
            .map(|f| {
                let mut g: Vec<Vertex> = f.into_iter().map(|v| remap[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        facets.sort_unstable();
        let index = new_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as Vertex))
            .collect();
        Complex {
            facets,
            labels: new_labels,
            index,
        }
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_id(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    /// Resolves a list of labels to sorted vertex ids.
    pub fn face_ids<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<Vertex>> {
        let mut ids = labels
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::NotAFace(format!("unknown vertex {}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        ids.dedup();
        Ok(ids)
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// `max facet cardinality - 1`; `-1` for the void complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Vec::len).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets.first().map_or(0, Vec::len);
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn is_face(&self, face: &[Vertex]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn is_facet(&self, face: &[Vertex]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.facets.binary_search(&f).is_ok()
    }

    /// Facets as sorted label lists, themselves sorted.
    pub fn labeled_facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                let mut ls: Vec<String> = f.iter().map(|&v| self.labels[v as usize].clone()).collect();
                ls.sort();
                ls
            })
            .collect();
        out.sort();
        out
    }

    /// All non-empty faces, grouped by dimension, each group sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<Vec<Vertex>>> {
        let dim = self.dim();
        if dim < 0 {
            return Vec::new();
        }
        let mut seen: Vec<HashSet<Vec<Vertex>>> = vec![HashSet::new(); dim as usize + 1];
        for f in &self.facets {
            assert!(f.len() < 32, "facet too large for subset enumeration");
            for mask in 1u32..(1u32 << f.len()) {
                let face: Vec<Vertex> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                seen[face.len() - 1].insert(face);
            }
        }
        seen.into_iter()
            .map(|s| {
                let mut v: Vec<_> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![1u64];
        counts.extend(self.faces_by_dim().iter().map(|g| g.len() as u64));
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// The 1-skeleton as a graph on the same ids and labels.
    pub fn skeleton_graph(&self) -> Graph {
        let mut g = Graph::with_labels(self.labels.clone());
        for f in &self.facets {
            for (i, &u) in f.iter().enumerate() {
                for &v in &f[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Clique complex of `g`: facets are the maximal cliques.
    pub fn clique_complex(g: &Graph) -> Complex {
        let n = g.num_vertices();
        let mut cliques = Vec::new();
        let mut r = Vec::new();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        bron_kerbosch(g, &mut r, p, x, &mut cliques);
        Complex::from_parts(cliques, g.labels().to_vec())
    }

    /// `K == cl(skeleton(K))`.
    pub fn is_flag(&self) -> bool {
        let closure = Complex::clique_complex(&self.skeleton_graph());
        closure.labels.len() == self.labels.len() && closure.facets == self.facets
    }

    /// Facets of `K` that contain `face` (a sorted id list).
    pub fn facets_containing<'a>(&'a self, face: &'a [Vertex]) -> impl Iterator<Item = &'a Vec<Vertex>> + 'a {
        self.facets.iter().filter(move |f| is_subset(face, f))
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ K}`, keeping the labels of `K`.
    pub fn link(&self, face: &[Vertex]) -> Result<Complex> {
        let mut face = face.to_vec();
        face.sort_unstable();
        face.dedup();
        let link_facets: Vec<Vec<Vertex>> = self
            .facets_containing(&face)
            .map(|f| f.iter().copied().filter(|v| face.binary_search(v).is_err()).collect())
            .collect();
        if link_facets.is_empty() {
            return Err(Error::NotAFace(self.describe(&face)));
        }
        Ok(Complex::from_parts(link_facets, self.labels.clone()))
    }

    /// Stellar subdivision at the edge `{x, y}` with new vertex `new_label`.
    pub fn stellar_subdivide_edge(&self, x: Vertex, y: Vertex, new_label: &str) -> Result<Complex> {
        if x == y || !self.is_face(&sorted_pair(x, y)) {
            return Err(Error::NotAFace(self.describe(&sorted_pair(x, y))));
        }
        let (mut labels, v) = self.with_new_label(new_label)?;
        let mut facets = Vec::with_capacity(self.facets.len() + 8);
        for f in &self.facets {
            if f.contains(&x) && f.contains(&y) {
                for drop in [x, y] {
                    let mut g: Vec<Vertex> = f.iter().copied().filter(|&w| w != drop).collect();
                    g.push(v);
                    facets.push(g);
                }
            } else {
                facets.push(f.clone());
            }
        }
        let out = Complex::from_parts(facets, std::mem::take(&mut labels));
        debug_assert_eq!(out.num_vertices(), self.num_vertices() + 1);
        Ok(out)
    }

    /// Label-based convenience for [`Complex::stellar_subdivide_edge`].
    pub fn subdivide_edge_by_label(&self, x: &str, y: &str, new_label: &str) -> Result<Complex> {
        let ids = self.face_ids(&[x, y])?;
        if ids.len() != 2 {
            return Err(Error::NotAFace(format!("{{{x},{y}}}")));
        }
        self.stellar_subdivide_edge(ids[0], ids[1], new_label)
    }

    /// Stellar subdivision of the facet `facet`: it is replaced by the cone
    /// from a new vertex over its boundary.
    pub fn stellar_subdivide_facet(&self, facet: &[Vertex], new_label: &str) -> Result<Complex> {
        let mut target = facet.to_vec();
        target.sort_unstable();
        let Ok(pos) = self.facets.binary_search(&target) else {
            return Err(Error::NotAFacet(self.describe(&target)));
        };
        let (labels, v) = self.with_new_label(new_label)?;
        let mut facets: Vec<Vec<Vertex>> = self.facets.clone();
        facets.remove(pos);
        for &x in &target {
            let mut g: Vec<Vertex> = target.iter().copied().filter(|&w| w != x).collect();
            g.push(v);
            facets.push(g);
        }
        Ok(Complex::from_parts(facets, labels))
    }

    /// Join `K1 * K2`. If the label sets collide, every left label gets the
    /// suffix `#L` and every right label `#R`.
    pub fn join(&self, other: &Complex) -> Complex {
        let collide = other.labels.iter().any(|l| self.index.contains_key(l));
        let mut labels: Vec<String> = Vec::with_capacity(self.labels.len() + other.labels.len());
        if collide {
            labels.extend(self.labels.iter().map(|l| format!("{l}#L")));
            labels.extend(other.labels.iter().map(|l| format!("{l}#R")));
        } else {
            labels.extend(self.labels.iter().cloned());
            labels.extend(other.labels.iter().cloned());
        }
        let off = self.labels.len() as Vertex;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut h = f.clone();
                h.extend(g.iter().map(|&v| v + off));
                facets.push(h);
            }
        }
        Complex::from_parts(facets, labels)
    }

    /// Join with two non-adjacent apexes `p_i`, `q_i` (smallest free `i`).
    pub fn suspension(&self) -> Complex {
        let i = (1..)
            .find(|i| {
                !self.index.contains_key(&format!("p_{i}")) && !self.index.contains_key(&format!("q_{i}"))
            })
            .unwrap();
        let poles = Complex::from_parts(vec![vec![0], vec![1]], vec![format!("p_{i}"), format!("q_{i}")]);
        self.join(&poles)
    }

    /// Same complex with vertex ids reassigned by `perm` (old id -> new id).
    pub fn permute_ids(&self, perm: &[Vertex]) -> Complex {
        assert_eq!(perm.len(), self.labels.len());
        let mut labels = vec![String::new(); perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            labels[new as usize] = self.labels[old].clone();
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&v| perm[v as usize]).collect())
            .collect();
        Complex::from_parts(facets, labels)
    }

    /// Same complex with every label passed through `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Complex> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidInput("relabelling is not injective".into()));
        }
        Ok(Complex::from_parts(self.facets.clone(), labels))
    }

    fn with_new_label(&self, label: &str) -> Result<(Vec<String>, Vertex)> {
        if self.index.contains_key(label) {
            return Err(Error::InvalidInput(format!("label {label} already in use")));
        }
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidInput(format!("bad vertex label {label:?}")));
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let id = (labels.len() - 1) as Vertex;
        Ok((labels, id))
    }

    pub(crate) fn describe(&self, face: &[Vertex]) -> String {
        let parts: Vec<&str> = face
            .iter()
            .map(|&v| self.labels.get(v as usize).map_or("?", String::as_str))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.facets.len() == other.facets.len() && self.labeled_facets() == other.labeled_facets()
    }
}

impl Eq for Complex {}

pub(crate) fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    // Both sorted.
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

fn sorted_pair(x: Vertex, y: Vertex) -> Vec<Vertex> {
    if x < y {
        vec![x, y]
    } else {
        vec![y, x]
    }
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<Vertex>,
    p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<Vertex>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    // Pivot maximising |P ∩ N(u)|.
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection(g.neighbor_set(u as Vertex)).count(), std::cmp::Reverse(u)))
        .unwrap();
    let mut candidates = p.clone();
    candidates.difference_with(g.neighbor_set(pivot as Vertex));
    let mut p = p;
    for v in candidates.ones() {
        let nv = g.neighbor_set(v as Vertex);
        let mut p2 = p.clone();
        p2.intersect_with(nv);
        let mut x2 = x.clone();
        x2.intersect_with(nv);
        r.push(v as Vertex);
        bron_kerbosch(g, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}
