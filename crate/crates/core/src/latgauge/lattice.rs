use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{LatticeError, Su2Matrix};

/// One step of a lattice path along direction `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub mu: usize,
    pub forward: bool,
}

impl Step {
    pub fn fwd(mu: usize) -> Step {
        Step { mu, forward: true }
    }

    pub fn back(mu: usize) -> Step {
        Step { mu, forward: false }
    }

    pub fn reversed(self) -> Step {
        Step {
            mu: self.mu,
            forward: !self.forward,
        }
    }
}

/// A walk on the lattice from `start` by unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: Vec<usize>,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Vec<usize>, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Elementary plaquette `+mu, +nu, -mu, -nu`.
    pub fn plaquette(start: Vec<usize>, mu: usize, nu: usize) -> Self {
        Self::rectangle(start, mu, nu, 1, 1)
    }

    /// `lm × ln` rectangle in the `(mu, nu)` plane, counterclockwise.
    pub fn rectangle(start: Vec<usize>, mu: usize, nu: usize, lm: usize, ln: usize) -> Self {
        let mut steps = Vec::with_capacity(2 * (lm + ln));
        steps.extend(std::iter::repeat_n(Step::fwd(mu), lm));
        steps.extend(std::iter::repeat_n(Step::fwd(nu), ln));
        steps.extend(std::iter::repeat_n(Step::back(mu), lm));
        steps.extend(std::iter::repeat_n(Step::back(nu), ln));
        LatticePath { start, steps }
    }

    /// The same curve walked backwards, starting at `end`.
    pub fn reversed(&self, end: Vec<usize>) -> Self {
        LatticePath {
            start: end,
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// Append `other`'s steps; its start must be this path's end.
    pub fn then(&self, other: &LatticePath) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        LatticePath {
            start: self.start.clone(),
            steps,
        }
    }

    /// Start the closed loop `shift` steps later along itself.
    pub fn rotated(&self, dims: &[usize], shift: usize) -> Result<Self, LatticeError> {
        let n = self.steps.len();
        if n == 0 {
            return Ok(self.clone());
        }
        let shift = shift % n;
        let sites = walk(dims, &self.start, &self.steps)?;
        let mut steps = self.steps[shift..].to_vec();
        steps.extend_from_slice(&self.steps[..shift]);
        Ok(LatticePath {
            start: sites[shift].clone(),
            steps,
        })
    }
}

fn check_site(dims: &[usize], x: &[usize]) -> Result<(), LatticeError> {
    if x.len() != dims.len() || x.iter().zip(dims).any(|(c, d)| c >= d) {
        return Err(LatticeError::Path(format!("site {x:?} is not on a {dims:?} lattice")));
    }
    Ok(())
}

fn shift(dims: &[usize], x: &[usize], step: Step) -> Result<Vec<usize>, LatticeError> {
    if step.mu >= dims.len() {
        return Err(LatticeError::Path(format!(
            "direction {} on a {}-dimensional lattice",
            step.mu,
            dims.len()
        )));
    }
    let mut y = x.to_vec();
    let l = dims[step.mu];
    y[step.mu] = if step.forward { (x[step.mu] + 1) % l } else { (x[step.mu] + l - 1) % l };
    Ok(y)
}

/// Sites visited, including start and end.
fn walk(dims: &[usize], start: &[usize], steps: &[Step]) -> Result<Vec<Vec<usize>>, LatticeError> {
    check_site(dims, start)?;
    let mut out = vec![start.to_vec()];
    for s in steps {
        let next = shift(dims, out.last().unwrap(), *s)?;
        out.push(next);
    }
    Ok(out)
}

#[derive(Deserialize)]
struct RawField {
    dims: Vec<usize>,
    links: Vec<[f64; 4]>,
}

/// SU(2) link variables `U_μ(x)` on a periodic lattice. Sites are numbered
/// row-major (last coordinate fastest); link `(x, μ)` is stored at
/// `site·ndim + μ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawField")]
pub struct LatticeGaugeField {
    dims: Vec<usize>,
    links: Vec<Su2Matrix>,
}

impl TryFrom<RawField> for LatticeGaugeField {
    type Error = LatticeError;
    fn try_from(raw: RawField) -> Result<Self, LatticeError> {
        let links = raw.links.iter().map(|q| Su2Matrix { q: *q }).collect();
        LatticeGaugeField::from_links(raw.dims, links)
    }
}

fn check_dims(dims: &[usize]) -> Result<usize, LatticeError> {
    if dims.is_empty() || dims.iter().any(|d| *d < 2) {
        return Err(LatticeError::Size(format!("every extent must be >= 2, got {dims:?}")));
    }
    dims.iter()
        .try_fold(1usize, |acc, d| acc.checked_mul(*d))
        .ok_or_else(|| LatticeError::Size("lattice too large".into()))
}

/// Tolerance on `|q|² - 1` when accepting external link data.
const UNIT_TOL: f64 = 1e-9;

impl LatticeGaugeField {
    pub fn identity(dims: &[usize]) -> Result<Self, LatticeError> {
        let n = check_dims(dims)?;
        Ok(LatticeGaugeField {
            dims: dims.to_vec(),
            links: vec![Su2Matrix::IDENTITY; n * dims.len()],
        })
    }

    /// Haar-random links, deterministic per seed.
    pub fn random(dims: &[usize], seed: u64) -> Result<Self, LatticeError> {
        let n = check_dims(dims)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(LatticeGaugeField {
            dims: dims.to_vec(),
            links: (0..n * dims.len()).map(|_| Su2Matrix::haar(&mut rng)).collect(),
        })
    }

    pub fn from_links(dims: Vec<usize>, links: Vec<Su2Matrix>) -> Result<Self, LatticeError> {
        let n = check_dims(&dims)?;
        if links.len() != n * dims.len() {
            return Err(LatticeError::Size(format!(
                "expected {} links, got {}",
                n * dims.len(),
                links.len()
            )));
        }
        if let Some(i) = links.iter().position(|u| !(u.norm_defect() <= UNIT_TOL)) {
            return Err(LatticeError::Domain(format!("link {i} is not a unit quaternion")));
        }
        Ok(LatticeGaugeField { dims, links })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn links(&self) -> &[Su2Matrix] {
        &self.links
    }

    pub fn site_count(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn site_index(&self, x: &[usize]) -> Result<usize, LatticeError> {
        check_site(&self.dims, x)?;
        Ok(x.iter().zip(&self.dims).fold(0, |acc, (c, d)| acc * d + c))
    }

    pub fn site_coords(&self, mut i: usize) -> Vec<usize> {
        let mut x = vec![0; self.dims.len()];
        for (c, d) in x.iter_mut().zip(&self.dims).rev() {
            *c = i % d;
            i /= d;
        }
        x
    }

    pub fn link(&self, x: &[usize], mu: usize) -> Result<Su2Matrix, LatticeError> {
        if mu >= self.dims.len() {
            return Err(LatticeError::Path(format!("no direction {mu}")));
        }
        Ok(self.links[self.site_index(x)? * self.dims.len() + mu])
    }

    /// End site of a path.
    pub fn endpoint(&self, path: &LatticePath) -> Result<Vec<usize>, LatticeError> {
        Ok(walk(&self.dims, &path.start, &path.steps)?.pop().unwrap())
    }

    /// Ordered product `U_1 U_2 ⋯ U_n` of the links along the path, first step
    /// leftmost; a backward step contributes `U_μ(x-μ̂)†`. With this order the
    /// holonomy of `p1` followed by `p2` is `hol(p1)·hol(p2)`, and a field
    /// `g(x)g†(x+μ̂)` telescopes to `g(start)·g†(end)`.
    pub fn holonomy(&self, path: &LatticePath) -> Result<Su2Matrix, LatticeError> {
        let sites = walk(&self.dims, &path.start, &path.steps)?;
        let mut out = Su2Matrix::IDENTITY;
        for (i, s) in path.steps.iter().enumerate() {
            let u = if s.forward {
                self.link(&sites[i], s.mu)?
            } else {
                self.link(&sites[i + 1], s.mu)?.dagger()
            };
            out = out * u;
        }
        Ok(out)
    }

    /// `(1/2) Tr` of the holonomy around a closed path.
    pub fn wilson_loop(&self, path: &LatticePath) -> Result<f64, LatticeError> {
        let end = self.endpoint(path)?;
        if end != path.start {
            return Err(LatticeError::NotClosed {
                start: path.start.clone(),
                end,
            });
        }
        Ok(0.5 * self.holonomy(path)?.trace())
    }

    /// `U_μ(x) → g(x) U_μ(x) g†(x+μ̂)`, with `g` indexed by site.
    pub fn gauge_transform(&self, g: &[Su2Matrix]) -> Result<Self, LatticeError> {
        self.check_gauge(g)?;
        let nd = self.dims.len();
        let links = (0..self.site_count())
            .flat_map(|s| (0..nd).map(move |mu| (s, mu)))
            .map(|(s, mu)| {
                let x = self.site_coords(s);
                let y = shift(&self.dims, &x, Step::fwd(mu)).expect("valid direction");
                let t = self.site_index(&y).expect("valid site");
                g[s] * self.links[s * nd + mu] * g[t].dagger()
            })
            .collect();
        Ok(LatticeGaugeField {
            dims: self.dims.clone(),
            links,
        })
    }

    fn check_gauge(&self, g: &[Su2Matrix]) -> Result<(), LatticeError> {
        if g.len() != self.site_count() {
            return Err(LatticeError::Domain(format!(
                "gauge function has {} sites, lattice has {}",
                g.len(),
                self.site_count()
            )));
        }
        Ok(())
    }

    /// The pure gauge `U_μ(x) = g(x) g†(x+μ̂)`.
    pub fn pure_gauge(dims: &[usize], g: &[Su2Matrix]) -> Result<Self, LatticeError> {
        Self::identity(dims)?.gauge_transform(g)
    }

    /// All elementary plaquettes `(x, μ < ν)`.
    pub fn plaquettes(&self) -> Vec<LatticePath> {
        let nd = self.dims.len();
        (0..self.site_count())
            .flat_map(|s| {
                let x = self.site_coords(s);
                (0..nd).flat_map(move |mu| {
                    let x = x.clone();
                    (mu + 1..nd).map(move |nu| LatticePath::plaquette(x.clone(), mu, nu))
                })
            })
            .collect()
    }

    /// `β Σ_plaquettes (1 - ½ Re Tr U_plaq)`.
    pub fn wilson_action(&self, beta: f64) -> Result<f64, LatticeError> {
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(LatticeError::Domain(format!("beta must be >= 0, got {beta}")));
        }
        let mut s = 0.0;
        for p in self.plaquettes() {
            s += 1.0 - self.wilson_loop(&p)?;
        }
        Ok(beta * s)
    }
}

/// Haar-random gauge function, one element per site.
pub fn random_gauge_function(dims: &[usize], seed: u64) -> Result<Vec<Su2Matrix>, LatticeError> {
    let n = check_dims(dims)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| Su2Matrix::haar(&mut rng)).collect())
}
