//! Simplicial homology with coefficients in the two-element field.

use std::collections::HashMap;

use crate::complex::{Complex, Vertex};

/// Betti numbers `β_0, ..., β_dim` over GF(2).
///
/// Boundary matrices are reduced column by column with sparse columns (sorted
/// row indices, addition is symmetric difference); `rank ∂_k` is the number of
/// columns that do not reduce to zero.
pub fn betti_mod2(k: &Complex) -> Vec<usize> {
    let faces = k.faces_by_dim();
    if faces.is_empty() {
        return Vec::new();
    }
    // ranks[i] = rank of ∂_i : C_i -> C_{i-1}, with ∂_0 = 0.
    let mut ranks = vec![0usize; faces.len() + 1];
    for i in 1..faces.len() {
        let rows: HashMap<&[Vertex], u32> = faces[i - 1]
            .iter()
            .enumerate()
            .map(|(r, f)| (f.as_slice(), r as u32))
            .collect();
        let columns = faces[i].iter().map(|f| {
            let mut col: Vec<u32> = (0..f.len())
                .map(|skip| {
                    let facet: Vec<Vertex> = f
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    rows[facet.as_slice()]
                })
                .collect();
            col.sort_unstable();
            col
        });
        ranks[i] = rank_gf2(columns, faces[i - 1].len());
    }
    (0..faces.len())
        .map(|i| faces[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}

/// Rank over GF(2) of the matrix with the given sparse columns.
pub(crate) fn rank_gf2(columns: impl Iterator<Item = Vec<u32>>, nrows: usize) -> usize {
    // pivot_owner[r] = reduced column whose lowest entry is row r.
    let mut pivot_owner: Vec<Option<Vec<u32>>> = vec![None; nrows];
    let mut rank = 0;
    for mut col in columns {
        while let Some(&low) = col.last() {
            match &pivot_owner[low as usize] {
                Some(other) => col = sym_diff(&col, other),
                None => {
                    pivot_owner[low as usize] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn sym_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(facets: Vec<Vec<String>>) -> Complex {
        Complex::from_facets(&facets).unwrap()
    }

    fn octahedron() -> Complex {
        let mut fs = Vec::new();
        for a in ["x", "X"] {
            for b in ["y", "Y"] {
                for c in ["z", "Z"] {
                    fs.push(vec![a.to_string(), b.to_string(), c.to_string()]);
                }
            }
        }
        complex(fs)
    }

    /// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    fn torus7() -> Complex {
        let mut fs = Vec::new();
        for i in 0..7 {
            fs.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
            fs.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
        }
        complex(
            fs.into_iter()
                .map(|f| f.into_iter().map(|v| v.to_string()).collect())
                .collect(),
        )
    }

    #[test]
    fn spheres() {
        assert_eq!(betti_mod2(&octahedron()), vec![1, 0, 1]);
        let sq: Vec<Vec<String>> = [["1", "2"], ["2", "3"], ["3", "4"], ["4", "1"]]
            .iter()
            .map(|e| e.iter().map(|s| s.to_string()).collect())
            .collect();
        let sq = complex(sq);
        assert_eq!(betti_mod2(&sq), vec![1, 1]);
        assert_eq!(betti_mod2(&sq.join(&sq)), vec![1, 0, 0, 1]);
    }

    #[test]
    fn torus() {
        let t = torus7();
        assert_eq!(t.f_vector().0, vec![1, 7, 21, 14]);
        assert_eq!(betti_mod2(&t), vec![1, 2, 1]);
    }

    #[test]
    fn disjoint_points_and_disc() {
        let pts = complex(vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]]);
        assert_eq!(betti_mod2(&pts), vec![3]);
        let disc = complex(vec![vec!["a".into(), "b".into(), "c".into()]]);
        assert_eq!(betti_mod2(&disc), vec![1, 0, 0]);
    }
}
