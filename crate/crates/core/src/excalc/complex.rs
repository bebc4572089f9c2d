use std::collections::{BTreeSet, HashMap};

use super::ExcalcError;

/// A strictly increasing vertex tuple.
pub type Simplex = Vec<usize>;

/// Largest simplex (in vertices) accepted by [`SimplicialComplex::build`];
/// the closure of a simplex with `n` vertices has `2^n - 1` faces.
const MAX_SIMPLEX_VERTICES: usize = 20;

/// Finite abstract simplicial complex, closed under taking faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// Closure of the given maximal simplices. Vertex order inside a tuple
    /// does not matter; repeated vertices do.
    pub fn build(maximal: &[Vec<usize>]) -> Result<Self, ExcalcError> {
        if maximal.is_empty() {
            return Err(ExcalcError::EmptyComplex);
        }
        let mut by_degree: Vec<BTreeSet<Simplex>> = Vec::new();
        for raw in maximal {
            if raw.is_empty() {
                return Err(ExcalcError::MalformedSimplex {
                    simplex: raw.clone(),
                    reason: "empty vertex tuple".into(),
                });
            }
            let mut s = raw.clone();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(ExcalcError::MalformedSimplex {
                    simplex: raw.clone(),
                    reason: "repeated vertex".into(),
                });
            }
            if s.len() > MAX_SIMPLEX_VERTICES {
                return Err(ExcalcError::MalformedSimplex {
                    simplex: raw.clone(),
                    reason: format!("more than {MAX_SIMPLEX_VERTICES} vertices"),
                });
            }
            let n = s.len();
            if by_degree.len() < n {
                by_degree.resize_with(n, BTreeSet::new);
            }
            for mask in 1u32..(1u32 << n) {
                let face: Simplex = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                by_degree[face.len() - 1].insert(face);
            }
        }
        let simplices: Vec<Vec<Simplex>> = by_degree.into_iter().map(|set| set.into_iter().collect()).collect();
        let index = simplices
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(Self { simplices, index })
    }

    /// Top degree with at least one simplex.
    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices[0].iter().map(|s| s[0]).collect()
    }

    /// The `p`-simplices in canonical order; empty above the dimension.
    pub fn simplices(&self, p: usize) -> &[Simplex] {
        self.simplices.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, p: usize) -> usize {
        self.simplices(p).len()
    }

    /// Simplex counts `(n_0, ..., n_dim)`.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Position of a (sorted) simplex inside its degree.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let p = simplex.len().checked_sub(1)?;
        self.index.get(p)?.get(simplex).copied()
    }

    /// Maximal simplices: those that are not a face of a larger one.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for p in 0..=self.dimension() {
            for s in self.simplices(p) {
                let covered = self.simplices(p + 1).iter().any(|t| s.iter().all(|v| t.contains(v)));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Same complex with every vertex `v` replaced by `relabel(v)`. The map
    /// must be injective on the vertex set.
    pub fn relabeled(&self, relabel: impl Fn(usize) -> usize) -> Result<Self, ExcalcError> {
        let maximal: Vec<Vec<usize>> = self
            .maximal_simplices()
            .into_iter()
            .map(|s| s.into_iter().map(&relabel).collect())
            .collect();
        Self::build(&maximal)
    }
}

/// Parse the text complex format: one maximal simplex per line as
/// comma-separated vertex ids, `#` starts a comment line.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ExcalcError> {
    let mut maximal = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tuple = line
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| ExcalcError::Parse {
                    line: lineno + 1,
                    message: format!("bad vertex id {:?}: {e}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        maximal.push(tuple);
    }
    SimplicialComplex::build(&maximal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_one_triangle() {
        let k = SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.counts(), vec![3, 3, 1]);
        assert_eq!(k.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn hollow_triangle_and_tetrahedron() {
        let c = SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(c.counts(), vec![3, 3]);
        let s = SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(s.counts(), vec![4, 6, 4]);
    }

    #[test]
    fn unsorted_input_is_canonicalized() {
        let k = SimplicialComplex::build(&[vec![2, 0, 1]]).unwrap();
        assert_eq!(k.simplices(2), &[vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_repeated_vertex_and_empty_tuple() {
        assert!(matches!(
            SimplicialComplex::build(&[vec![0, 0, 1]]),
            Err(ExcalcError::MalformedSimplex { .. })
        ));
        assert!(matches!(
            SimplicialComplex::build(&[vec![]]),
            Err(ExcalcError::MalformedSimplex { .. })
        ));
        assert_eq!(SimplicialComplex::build(&[]), Err(ExcalcError::EmptyComplex));
    }

    #[test]
    fn parse_text_format() {
        let k = parse_complex("# circle\n0,1\n1, 2\n\n0,2\n").unwrap();
        assert_eq!(k.counts(), vec![3, 3]);
        let err = parse_complex("0,1\n1,x\n").unwrap_err();
        assert!(matches!(err, ExcalcError::Parse { line: 2, .. }));
    }

    #[test]
    fn maximal_simplices_round_trip() {
        let k = SimplicialComplex::build(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(k.maximal_simplices(), vec![vec![2, 3], vec![0, 1, 2]]);
    }
}
