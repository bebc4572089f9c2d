use std::collections::HashMap;

use super::KnotError;

/// Hard cap on crossings for the `2^n` state sum.
pub const MAX_CROSSINGS: usize = 20;

/// Planar diagram of a link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
    components: usize,
    /// For each crossing, the slot (1 or 3) where the over-strand enters;
    /// `None` when the PD code admits no consistent orientation.
    over_entry: Option<Vec<u8>>,
}

impl KnotDiagram {
    /// Zero-crossing diagram of the unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` disjoint round circles.
    pub fn unlink(n: usize) -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: n,
            components: n,
            over_entry: Some(Vec::new()),
        }
    }

    /// Validate crossings (each arc exactly twice) and infer orientation.
    pub fn from_crossings(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self, KnotError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(KnotError::EmptyDiagram);
        }
        if crossings.len() > MAX_CROSSINGS {
            return Err(KnotError::TooManyCrossings(crossings.len()));
        }
        let mut occurrences: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for (slot, arc) in x.iter().enumerate() {
                occurrences.entry(*arc).or_default().push((c, slot));
            }
        }
        let mut bad: Vec<(u32, usize)> = occurrences
            .iter()
            .filter(|(_, occ)| occ.len() != 2)
            .map(|(a, occ)| (*a, occ.len()))
            .collect();
        if !bad.is_empty() {
            bad.sort_unstable();
            let (arc, n) = bad[0];
            return Err(KnotError::MalformedDiagram(format!("arc {arc} appears {n} times, expected 2")));
        }

        let walks = trace_components(&crossings, &occurrences);
        let over_entry = orient(&crossings, &walks);
        Ok(Self {
            components: walks.len() + free_loops,
            crossings,
            free_loops,
            over_entry,
        })
    }

    /// Closure of a braid on `strands` strands. Generator `i` (1-based) is a
    /// positive crossing of strands `i` and `i+1`, `-i` its inverse.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self, KnotError> {
        if strands == 0 {
            return Err(KnotError::Braid("need at least one strand".into()));
        }
        let mut label: Vec<u32> = (1..=strands as u32).collect();
        let mut next = strands as u32 + 1;
        let mut crossings = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(KnotError::Braid(format!("generator {g} on {strands} strands")));
            }
            let (a, b) = (label[i - 1], label[i]);
            let (c, d) = (next, next + 1);
            next += 2;
            // strands run upward; a, b enter at the bottom, c, d leave at the top
            crossings.push(if g > 0 { [b, d, c, a] } else { [a, b, d, c] });
            label[i - 1] = c;
            label[i] = d;
        }
        let mut closure = HashMap::new();
        let mut free_loops = 0;
        for (p, &top) in label.iter().enumerate() {
            let bottom = p as u32 + 1;
            if top == bottom {
                free_loops += 1;
            } else {
                closure.insert(top, bottom);
            }
        }
        for x in &mut crossings {
            for arc in x.iter_mut() {
                if let Some(b) = closure.get(arc) {
                    *arc = *b;
                }
            }
        }
        Self::from_crossings(crossings, free_loops)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_oriented(&self) -> bool {
        self.over_entry.is_some()
    }

    /// Crossing signs (+1 when the over-strand runs slot 3 -> slot 1).
    pub fn crossing_signs(&self) -> Result<Vec<i64>, KnotError> {
        let entries = self.over_entry.as_ref().ok_or(KnotError::Orientation)?;
        Ok(entries.iter().map(|&s| if s == 3 { 1 } else { -1 }).collect())
    }

    /// Same diagram with every crossing switched.
    pub fn mirror(&self) -> Result<Self, KnotError> {
        let entries = self.over_entry.as_ref().ok_or(KnotError::Orientation)?;
        let crossings = self
            .crossings
            .iter()
            .zip(entries)
            .map(|(&[i, j, k, l], &entry)| if entry == 3 { [l, i, j, k] } else { [j, k, l, i] })
            .collect();
        Self::from_crossings(crossings, self.free_loops)
    }

    /// Diagram side by side with `other`; arc labels of `other` are shifted.
    pub fn disjoint_union(&self, other: &KnotDiagram) -> Result<Self, KnotError> {
        let offset = self.crossings.iter().flatten().copied().max().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| x.map(|a| a + offset)));
        Self::from_crossings(crossings, self.free_loops + other.free_loops)
    }

    pub fn with_extra_loops(&self, n: usize) -> Result<Self, KnotError> {
        Self::from_crossings(self.crossings.clone(), self.free_loops + n)
    }
}

/// Walk every strand. Each walk is the list of `(crossing, slot)` pairs
/// through which the strand enters a crossing, in traversal order.
fn trace_components(crossings: &[[u32; 4]], occurrences: &HashMap<u32, Vec<(usize, usize)>>) -> Vec<Vec<(usize, usize)>> {
    let mut used = vec![[false; 4]; crossings.len()];
    let mut walks = Vec::new();
    for c0 in 0..crossings.len() {
        for s0 in 0..4 {
            if used[c0][s0] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut c, mut s) = (c0, s0);
            loop {
                walk.push((c, s));
                let out = (s + 2) % 4;
                used[c][s] = true;
                used[c][out] = true;
                let arc = crossings[c][out];
                let next = occurrences[&arc]
                    .iter()
                    .copied()
                    .find(|&o| o != (c, out))
                    .expect("arc occurs twice");
                (c, s) = next;
                if (c, s) == (c0, s0) {
                    break;
                }
            }
            walks.push(walk);
        }
    }
    walks
}

fn orient(crossings: &[[u32; 4]], walks: &[Vec<(usize, usize)>]) -> Option<Vec<u8>> {
    let mut over_entry = vec![0u8; crossings.len()];
    for walk in walks {
        let forward_under = walk.iter().any(|&(_, s)| s == 0);
        let backward_under = walk.iter().any(|&(_, s)| s == 2);
        let forward = match (forward_under, backward_under) {
            (true, true) => return None,
            (true, false) => true,
            (false, true) => false,
            (false, false) => {
                // only over-passes: orient so that arc labels increase away
                // from the smallest one
                let arcs: Vec<u32> = walk.iter().map(|&(c, s)| crossings[c][s]).collect();
                let n = arcs.len();
                let m = (0..n).min_by_key(|&i| arcs[i]).unwrap();
                n < 3 || arcs[(m + 1) % n] < arcs[(m + n - 1) % n]
            }
        };
        for &(c, s) in walk {
            let entered = if forward { s } else { (s + 2) % 4 };
            if entered % 2 == 1 {
                over_entry[c] = entered as u8;
            }
        }
    }
    Some(over_entry)
}

/// Parse a PD code such as `X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)`. Crossings
/// are separated by semicolons or newlines; `#` starts a comment line. With
/// `empty_is_unknot`, input without crossings yields the 0-crossing unknot.
pub fn parse_pd(text: &str, empty_is_unknot: bool) -> Result<KnotDiagram, KnotError> {
    let mut crossings = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        for token in line.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            crossings.push(parse_crossing(token)?);
        }
    }
    if crossings.is_empty() {
        return if empty_is_unknot {
            Ok(KnotDiagram::unknot())
        } else {
            Err(KnotError::EmptyDiagram)
        };
    }
    KnotDiagram::from_crossings(crossings, 0)
}

fn parse_crossing(token: &str) -> Result<[u32; 4], KnotError> {
    let err = |message: &str| KnotError::Parse {
        token: token.to_string(),
        message: message.to_string(),
    };
    let body = token
        .strip_prefix('X')
        .map(str::trim)
        .and_then(|t| t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).or_else(|| t.strip_prefix('[').and_then(|t| t.strip_suffix(']'))))
        .ok_or_else(|| err("expected X(a,b,c,d)"))?;
    let arcs: Vec<u32> = body
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| err("arc labels must be nonnegative integers")))
        .collect::<Result<_, _>>()?;
    arcs.try_into().map_err(|_| err("a crossing has exactly four arcs"))
}
