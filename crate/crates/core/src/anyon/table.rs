use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use num_traits::Zero;

use super::AnyonError;

/// Label of the identity field in every table.
pub const IDENTITY: &str = "1";

pub const KNOWN_CFTS: [&str; 3] = ["ising", "z3_parafermion", "chiral_boson_rational"];

/// Primary fields of a chiral CFT with their weights and fusion multiplicities
/// `N(a, b, c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionTable {
    name: String,
    central_charge: Rational64,
    labels: Vec<String>,
    dims: Vec<Rational64>,
    // n[a][b][c]
    n: Vec<Vec<Vec<u32>>>,
}

/// Path counts of repeated fusion with one field; `levels[0]` is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram {
    pub fused_field: String,
    pub levels: Vec<BTreeMap<String, u128>>,
}

impl BratteliDiagram {
    pub fn count(&self, level: usize, label: &str) -> u128 {
        self.levels.get(level).and_then(|m| m.get(label)).copied().unwrap_or(0)
    }
}

impl FusionTable {
    /// Build a table from labelled data. `rules` lists `(a, b, [(c, N)])` and is
    /// symmetrised; fusion with the identity is filled in automatically.
    pub fn new(
        name: &str,
        central_charge: Rational64,
        fields: &[(&str, Rational64)],
        rules: &[(&str, &str, &[(&str, u32)])],
    ) -> Result<Self, AnyonError> {
        let mut labels = vec![IDENTITY.to_string()];
        let mut dims = vec![Rational64::zero()];
        for (l, d) in fields {
            if labels.iter().any(|x| x == l) {
                return Err(AnyonError::InvalidTable(format!("duplicate label {l:?}")));
            }
            labels.push(l.to_string());
            dims.push(*d);
        }
        let size = labels.len();
        let mut t = FusionTable {
            name: name.to_string(),
            central_charge,
            labels,
            dims,
            n: vec![vec![vec![0; size]; size]; size],
        };
        for a in 0..size {
            t.n[0][a][a] = 1;
            t.n[a][0][a] = 1;
        }
        for (a, b, out) in rules {
            let (ia, ib) = (t.index(a)?, t.index(b)?);
            if ia == 0 || ib == 0 {
                return Err(AnyonError::InvalidTable("identity fusion is implicit".into()));
            }
            for (c, m) in out.iter() {
                let ic = t.index(c)?;
                if t.n[ia][ib][ic] != 0 && t.n[ia][ib][ic] != *m {
                    return Err(AnyonError::InvalidTable(format!("conflicting entry {a} x {b} -> {c}")));
                }
                t.n[ia][ib][ic] = *m;
                t.n[ib][ia][ic] = *m;
            }
        }
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), AnyonError> {
        let size = self.labels.len();
        if self.dims.iter().any(|d| *d < Rational64::zero()) {
            return Err(AnyonError::InvalidTable("negative conformal weight".into()));
        }
        for a in 0..size {
            if !(0..size).any(|b| self.n[a][b][0] > 0) {
                return Err(AnyonError::InvalidTable(format!("{} has no conjugate", self.labels[a])));
            }
            for b in 0..size {
                if self.n[a][b] != self.n[b][a] {
                    return Err(AnyonError::InvalidTable("fusion is not symmetric".into()));
                }
                if self.n[a][b].iter().all(|m| *m == 0) {
                    return Err(AnyonError::InvalidTable(format!(
                        "{} x {} is empty",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn central_charge(&self) -> Rational64 {
        self.central_charge
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index(&self, label: &str) -> Result<usize, AnyonError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| AnyonError::UnknownLabel(label.to_string()))
    }

    pub fn weight(&self, label: &str) -> Result<Rational64, AnyonError> {
        Ok(self.dims[self.index(label)?])
    }

    pub fn multiplicity(&self, a: &str, b: &str, c: &str) -> Result<u32, AnyonError> {
        Ok(self.n[self.index(a)?][self.index(b)?][self.index(c)?])
    }

    /// `a x b` as `(label, multiplicity)` pairs in table order.
    pub fn fuse(&self, a: &str, b: &str) -> Result<Vec<(String, u32)>, AnyonError> {
        let (ia, ib) = (self.index(a)?, self.index(b)?);
        Ok(self.n[ia][ib]
            .iter()
            .enumerate()
            .filter(|(_, m)| **m > 0)
            .map(|(c, m)| (self.labels[c].clone(), *m))
            .collect())
    }

    /// Exponent `Δ_k - Δ_i - Δ_j` of `(z-w)` in the OPE `φ_i(z) φ_j(w) ~ φ_k(w)`.
    pub fn ope_exponent(&self, i: &str, j: &str, k: &str) -> Result<Rational64, AnyonError> {
        if self.multiplicity(i, j, k)? == 0 {
            return Err(AnyonError::ForbiddenChannel {
                a: i.into(),
                b: j.into(),
                c: k.into(),
            });
        }
        Ok(self.weight(k)? - self.weight(i)? - self.weight(j)?)
    }

    /// Whether the fields can fuse to the identity (a correlator of them can
    /// be nonzero).
    pub fn neutral(&self, fields: &[&str]) -> Result<bool, AnyonError> {
        let idx: Vec<usize> = fields.iter().map(|f| self.index(f)).collect::<Result<_, _>>()?;
        let Some((first, rest)) = idx.split_first() else {
            return Err(AnyonError::Domain("neutral() needs at least one field".into()));
        };
        let mut reach = BTreeSet::from([*first]);
        for f in rest {
            reach = reach
                .iter()
                .flat_map(|r| (0..self.labels.len()).filter(move |c| self.n[*r][*f][*c] > 0))
                .collect();
        }
        Ok(reach.contains(&0))
    }

    /// Fusion matrix `(M_a)_{bc} = N(a, b, c)`.
    pub fn fusion_matrix(&self, a: &str) -> Result<Vec<Vec<u32>>, AnyonError> {
        Ok(self.n[self.index(a)?].clone())
    }

    pub fn bratteli(&self, field: &str, steps: usize) -> Result<BratteliDiagram, AnyonError> {
        let f = self.index(field)?;
        let size = self.labels.len();
        let mut counts = vec![0u128; size];
        counts[0] = 1;
        let to_map = |c: &[u128]| -> BTreeMap<String, u128> {
            c.iter()
                .enumerate()
                .filter(|(_, x)| **x > 0)
                .map(|(i, x)| (self.labels[i].clone(), *x))
                .collect()
        };
        let mut levels = vec![to_map(&counts)];
        for level in 1..=steps {
            let mut next = vec![0u128; size];
            for (b, cb) in counts.iter().enumerate().filter(|(_, x)| **x > 0) {
                for (c, slot) in next.iter_mut().enumerate() {
                    let m = self.n[b][f][c] as u128;
                    if m > 0 {
                        *slot = cb
                            .checked_mul(m)
                            .and_then(|x| slot.checked_add(x))
                            .ok_or(AnyonError::Overflow(level))?;
                    }
                }
            }
            counts = next;
            levels.push(to_map(&counts));
        }
        Ok(BratteliDiagram {
            fused_field: field.to_string(),
            levels,
        })
    }

    /// Number of conformal blocks: fusion paths of `steps` copies of `field`
    /// from the identity to `target`.
    pub fn count_blocks(&self, field: &str, steps: usize, target: &str) -> Result<u128, AnyonError> {
        self.index(target)?;
        Ok(self.bratteli(field, steps)?.count(steps, target))
    }

    /// First `(a, b, c, f)` violating `Σ_e N(a,b,e)N(e,c,f) = Σ_e N(b,c,e)N(a,e,f)`.
    pub fn associativity_violation(&self) -> Option<[String; 4]> {
        let size = self.labels.len();
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    for f in 0..size {
                        let lhs: u64 = (0..size).map(|e| self.n[a][b][e] as u64 * self.n[e][c][f] as u64).sum();
                        let rhs: u64 = (0..size).map(|e| self.n[b][c][e] as u64 * self.n[a][e][f] as u64).sum();
                        if lhs != rhs {
                            let l = |i: usize| self.labels[i].clone();
                            return Some([l(a), l(b), l(c), l(f)]);
                        }
                    }
                }
            }
        }
        None
    }
}

/// One of the built-in tables.
pub fn load_cft(name: &str) -> Result<FusionTable, AnyonError> {
    let r = Rational64::new;
    match name {
        "ising" => FusionTable::new(
            "ising",
            r(1, 2),
            &[("psi", r(1, 2)), ("sigma", r(1, 16))],
            &[
                ("psi", "psi", &[("1", 1)]),
                ("sigma", "psi", &[("sigma", 1)]),
                ("sigma", "sigma", &[("1", 1), ("psi", 1)]),
            ],
        ),
        "z3_parafermion" => FusionTable::new(
            "z3_parafermion",
            r(4, 5),
            &[
                ("psi1", r(2, 3)),
                ("psi2", r(2, 3)),
                ("sigma1", r(1, 15)),
                ("sigma2", r(1, 15)),
                ("epsilon", r(2, 5)),
            ],
            &[
                ("psi1", "psi1", &[("psi2", 1)]),
                ("psi2", "psi1", &[("1", 1)]),
                ("psi2", "psi2", &[("psi1", 1)]),
                ("sigma1", "psi1", &[("epsilon", 1)]),
                ("sigma1", "psi2", &[("sigma2", 1)]),
                ("sigma1", "sigma1", &[("sigma2", 1), ("psi1", 1)]),
                ("sigma2", "psi1", &[("sigma1", 1)]),
                ("sigma2", "psi2", &[("epsilon", 1)]),
                ("sigma2", "sigma1", &[("1", 1), ("epsilon", 1)]),
                ("sigma2", "sigma2", &[("sigma1", 1), ("psi2", 1)]),
                ("epsilon", "psi1", &[("sigma2", 1)]),
                ("epsilon", "psi2", &[("sigma1", 1)]),
                ("epsilon", "sigma1", &[("sigma1", 1), ("psi2", 1)]),
                ("epsilon", "sigma2", &[("sigma2", 1), ("psi1", 1)]),
                ("epsilon", "epsilon", &[("1", 1), ("epsilon", 1)]),
            ],
        ),
        // α = m/2 with m mod 4: the boson at the radius where e^{iαφ} with
        // Δ = α²/2 closes into a finite table
        "chiral_boson_rational" => chiral_boson_lattice(r(1, 2), 4),
        other => Err(AnyonError::UnknownCft(other.to_string())),
    }
}

/// Vertex operators `e^{iαφ}` with `α = m·step`, `m` taken mod `modulus` and
/// represented in `(-modulus/2, modulus/2]`. Fusion adds charges; `Δ = α²/2`.
/// Labels are `"1"` and `"v<α>"`, e.g. `"v1/2"`, `"v-1/2"`.
pub fn chiral_boson_lattice(step: Rational64, modulus: u32) -> Result<FusionTable, AnyonError> {
    if modulus == 0 || step <= Rational64::zero() {
        return Err(AnyonError::Domain("need a positive step and modulus".into()));
    }
    let n = modulus as i64;
    let rep = |m: i64| -> i64 {
        let r = m.rem_euclid(n);
        if 2 * r > n {
            r - n
        } else {
            r
        }
    };
    let charges: Vec<i64> = (0..n).map(rep).filter(|m| *m != 0).collect();
    let label = |m: i64| -> String {
        if m == 0 {
            IDENTITY.to_string()
        } else {
            format!("v{}", step * m)
        }
    };
    let names: Vec<String> = charges.iter().map(|m| label(*m)).collect();
    let fields: Vec<(&str, Rational64)> = charges
        .iter()
        .zip(&names)
        .map(|(m, l)| {
            let a = step * *m;
            (l.as_str(), a * a / 2)
        })
        .collect();
    let products: Vec<(String, String, String)> = charges
        .iter()
        .flat_map(|a| charges.iter().map(move |b| (*a, *b)))
        .map(|(a, b)| (label(a), label(b), label(rep(a + b))))
        .collect();
    let outs: Vec<[(&str, u32); 1]> = products.iter().map(|(_, _, c)| [(c.as_str(), 1)]).collect();
    let rules: Vec<(&str, &str, &[(&str, u32)])> = products
        .iter()
        .zip(&outs)
        .map(|((a, b, _), o)| (a.as_str(), b.as_str(), &o[..]))
        .collect();
    FusionTable::new("chiral_boson_rational", Rational64::from_integer(1), &fields, &rules)
}
