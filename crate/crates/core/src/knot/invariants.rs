use std::collections::HashMap;

use super::{KnotDiagram, KnotError, LaurentPolynomial};
use crate::C64;

/// Loop value `δ = -A^2 - A^-2`.
pub fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Kauffman bracket in powers of `A`, normalized so a single round circle
/// has bracket 1.
///
/// At a crossing `X(a,b,c,d)` the A-smoothing joins arcs `a,b` and `c,d`; the
/// B-smoothing joins `a,d` and `b,c`. A state with `α` A-smoothings, `β`
/// B-smoothings and `L` loops contributes `A^(α-β) δ^(L-1)`.
pub fn kauffman_bracket(d: &KnotDiagram) -> LaurentPolynomial {
    let n = d.crossing_count();
    let mut dense: HashMap<u32, usize> = HashMap::new();
    let crossings: Vec<[usize; 4]> = d
        .crossings()
        .iter()
        .map(|x| {
            x.map(|arc| {
                let next = dense.len();
                *dense.entry(arc).or_insert(next)
            })
        })
        .collect();
    let arcs = dense.len();
    let mut uf = UnionFind { parent: vec![0; arcs] };

    // histogram over (α - β, loops)
    let mut histogram: HashMap<(i64, usize), i64> = HashMap::new();
    for state in 0u64..(1u64 << n) {
        uf.reset();
        for (i, &[a, b, c, e]) in crossings.iter().enumerate() {
            if state >> i & 1 == 0 {
                uf.union(a, b);
                uf.union(c, e);
            } else {
                uf.union(a, e);
                uf.union(b, c);
            }
        }
        let loops = (0..arcs).filter(|&x| uf.find(x) == x).count() + d.free_loops();
        let b_count = state.count_ones() as i64;
        *histogram.entry((n as i64 - 2 * b_count, loops)).or_insert(0) += 1;
    }

    let delta = loop_value();
    let max_loops = histogram.keys().map(|k| k.1).max().unwrap_or(1);
    let powers: Vec<LaurentPolynomial> = std::iter::successors(Some(LaurentPolynomial::one()), |p| Some(p * &delta))
        .take(max_loops)
        .collect();
    let mut total = LaurentPolynomial::zero();
    for ((shift, loops), count) in histogram {
        for (e, c) in powers[loops - 1].terms() {
            total.add_term(count * c, e + shift);
        }
    }
    total
}

/// Sum of crossing signs.
pub fn writhe(d: &KnotDiagram) -> Result<i64, KnotError> {
    Ok(d.crossing_signs()?.iter().sum())
}

/// `(-A)^(-3w) ⟨D⟩` in powers of `A`.
fn framed_bracket(d: &KnotDiagram) -> Result<LaurentPolynomial, KnotError> {
    let w = writhe(d)?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&LaurentPolynomial::monomial(sign, -3 * w) * &kauffman_bracket(d))
}

/// Jones polynomial with `V(unknot) = 1`, in half-units of `t = A^-4`.
pub fn jones(d: &KnotDiagram) -> Result<LaurentPolynomial, KnotError> {
    Ok(framed_bracket(d)?
        .rescale_exponents(-1, 2)
        .expect("framed bracket has only even powers of A"))
}

/// `δ · V(D)` in half-units of the skein variable `q = A^-2`, so that the
/// round circle evaluates to `-q - q^-1`.
pub fn unnormalized_jones(d: &KnotDiagram) -> Result<LaurentPolynomial, KnotError> {
    Ok((&loop_value() * &framed_bracket(d)?).invert_variable())
}

/// `t^-1 V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0)`, exactly.
///
/// The three diagrams must agree outside one crossing site; that is the
/// caller's responsibility and is not checked.
pub fn verify_jones_skein(plus: &KnotDiagram, minus: &KnotDiagram, zero: &KnotDiagram) -> Result<bool, KnotError> {
    let t_inv = LaurentPolynomial::monomial(1, -2);
    let t = LaurentPolynomial::monomial(1, 2);
    let lhs = &(&t_inv * &jones(plus)?) - &(&t * &jones(minus)?);
    let factor = LaurentPolynomial::from_terms([(1, 1), (-1, -1)]);
    let rhs = &factor * &jones(zero)?;
    Ok(lhs == rhs)
}

/// Value of a half-unit polynomial at the level-`k` root of unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelEvaluation {
    pub k: i64,
    pub q: C64,
    pub value: C64,
}

/// `q = -exp(iπ/(k+2))`.
pub fn level_q(k: i64) -> Result<C64, KnotError> {
    if k < 1 {
        return Err(KnotError::Level(k));
    }
    Ok(-C64::from_polar(1.0, std::f64::consts::PI / (k + 2) as f64))
}

/// Substitute the variable by `q = -exp(iπ/(k+2))`, using
/// `q^(1/2) = exp(iθ/2)` for `q = exp(iθ)`, `θ ∈ (-π, π]`.
pub fn evaluate_at_level(v: &LaurentPolynomial, k: i64) -> Result<LevelEvaluation, KnotError> {
    let q = level_q(k)?;
    let root = C64::from_polar(1.0, q.arg() / 2.0);
    Ok(LevelEvaluation {
        k,
        q,
        value: v.evaluate_with_root(root),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_pd;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknot_and_unlink() {
        assert_eq!(kauffman_bracket(&KnotDiagram::unknot()), LaurentPolynomial::one());
        assert_eq!(kauffman_bracket(&KnotDiagram::unlink(2)), loop_value());
        assert_eq!(jones(&KnotDiagram::unknot()).unwrap(), LaurentPolynomial::one());
        assert_eq!(writhe(&KnotDiagram::unknot()).unwrap(), 0);
    }

    #[test]
    fn trefoil_bracket_and_jones() {
        // left-handed trefoil
        let d = parse_pd("X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)", false).unwrap();
        assert_eq!(kauffman_bracket(&d), lp(&[(-5, -1), (3, -1), (7, 1)]));
        assert_eq!(writhe(&d).unwrap(), -3);
        // -t^-4 + t^-3 + t^-1
        assert_eq!(jones(&d).unwrap(), lp(&[(-8, -1), (-6, 1), (-2, 1)]));
    }

    #[test]
    fn kink_is_invisible_to_jones() {
        let d = parse_pd("X(1,1,2,2)", false).unwrap();
        assert_eq!(kauffman_bracket(&d), lp(&[(3, -1)]));
        assert_eq!(jones(&d).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn figure_eight_writhe_zero() {
        let d = parse_pd("X(4,2,5,1); X(8,6,1,5); X(6,3,7,4); X(2,7,3,8)", false).unwrap();
        assert_eq!(writhe(&d).unwrap(), 0);
        // t^-2 - t^-1 + 1 - t + t^2
        assert_eq!(jones(&d).unwrap(), lp(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]));
    }

    #[test]
    fn unnormalized_circle_is_quantum_dimension() {
        let v = unnormalized_jones(&KnotDiagram::unknot()).unwrap();
        assert_eq!(v, lp(&[(2, -1), (-2, -1)]));
        for k in 1..=16 {
            let e = evaluate_at_level(&v, k).unwrap();
            let d = 2.0 * (std::f64::consts::PI / (k + 2) as f64).cos();
            assert!((e.value - C64::new(d, 0.0)).norm() < 1e-12);
            assert!((e.q.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn level_must_be_positive() {
        assert_eq!(evaluate_at_level(&LaurentPolynomial::one(), 0), Err(KnotError::Level(0)));
    }

    #[test]
    fn skein_negative_control() {
        let trefoil = KnotDiagram::from_braid(2, &[1, 1, 1]).unwrap();
        let unknot = KnotDiagram::from_braid(2, &[1]).unwrap();
        let hopf = KnotDiagram::from_braid(2, &[1, 1]).unwrap();
        assert!(verify_jones_skein(&trefoil, &unknot, &hopf).unwrap());
        assert!(!verify_jones_skein(&trefoil, &hopf, &unknot).unwrap());
    }
}
