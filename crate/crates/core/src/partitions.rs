//! Partition combinatorics: conjugation, cell statistics, the two dominance
//! orders, enumeration in rectangles and by weight, and orbit data.

use crate::algebra::{rat_int, Rat};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Weakly decreasing sequence of positive integers; the empty partition is `[]`.
///
/// Canonicalized on construction: zero parts are stripped, parts sorted
/// decreasingly. Serializes as a JSON integer array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Arm/leg statistics of one cell (i,j) of a diagram, 1-indexed rows/columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    /// arm-length lambda_i - j
    pub arm: u32,
    /// arm-colength j - 1
    pub arm_co: u32,
    /// leg-length lambda'_j - i
    pub leg: u32,
    /// leg-colength i - 1
    pub leg_co: u32,
}

impl Partition {
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle (c^r): r rows of length c.
    pub fn rectangle(c: u32, r: usize) -> Self {
        if c == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![c; r],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row i (1-indexed), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part value `v`.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells (i,j), 1-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as usize).map(move |j| (i + 1, j)))
    }

    pub fn cell_stats(&self, i: usize, j: usize) -> CellStats {
        let conj = self.conjugate();
        CellStats {
            arm: self.part(i) - j as u32,
            arm_co: j as u32 - 1,
            leg: conj.part(j) - i as u32,
            leg_co: i as u32 - 1,
        }
    }

    /// All cell statistics, computing the conjugate once.
    pub fn all_cell_stats(&self) -> Vec<CellStats> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| CellStats {
                arm: self.part(i) - j as u32,
                arm_co: j as u32 - 1,
                leg: conj.part(j) - i as u32,
                leg_co: i as u32 - 1,
            })
            .collect()
    }

    /// Containment of diagrams: lambda_i <= mu_i for all i.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.length()).all(|i| self.part(i) <= other.part(i))
    }

    /// Containment in the rectangle (m^n): first part <= m, length <= n.
    pub fn fits_in_rectangle(&self, m: u32, n: usize) -> bool {
        self.part(1) <= m && self.length() <= n
    }

    /// z_lambda = prod_i i^{m_i} m_i!, the power-sum normalizer.
    pub fn z_factor(&self) -> Rat {
        let mut z = rat_int(1);
        let mut v = 1;
        while v <= self.part(1) {
            let m = self.multiplicity(v) as i64;
            for k in 1..=m {
                z *= rat_int(v as i64);
                z *= rat_int(k);
            }
            // the loop above multiplies v^m * m! in one pass
            v += 1;
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Type A dominance: equal weights and partial-sum domination.
pub fn dominance_leq_a(mu: &Partition, lambda: &Partition) -> bool {
    mu.weight() == lambda.weight() && partial_sums_leq(mu, lambda)
}

/// Type BC dominance: partial-sum domination only (weights may differ).
pub fn dominance_leq_bc(mu: &Partition, lambda: &Partition) -> bool {
    partial_sums_leq(mu, lambda)
}

fn partial_sums_leq(mu: &Partition, lambda: &Partition) -> bool {
    let rows = mu.length().max(lambda.length());
    let mut su = 0u64;
    let mut sl = 0u64;
    for i in 1..=rows {
        su += mu.part(i) as u64;
        sl += lambda.part(i) as u64;
        if su > sl {
            return false;
        }
    }
    true
}

/// All partitions of weight exactly `d`, in decreasing lexicographic order.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(d, d, &mut current, &mut out);
    out
}

/// All partitions fitting in the rectangle (m^n); count is C(m+n, n).
pub fn partitions_in_rectangle(m: u32, n: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut current: Vec<u32> = Vec::new();
    fn rec(m: u32, rows_left: usize, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            current.push(p);
            out.push(Partition {
                parts: {
                    let mut v = current.clone();
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    v
                },
            });
            rec(m, rows_left - 1, p, current, out);
            current.pop();
        }
    }
    rec(m, n, m, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// The complement partition in the dual Cauchy pairing on (m^n):
/// tilde(lambda) = (n - lambda'_m, ..., n - lambda'_1), a partition in (n^m).
pub fn tilde_complement(lambda: &Partition, m: u32, n: usize) -> Result<Partition, String> {
    if !lambda.fits_in_rectangle(m, n) {
        return Err(format!(
            "{lambda} does not fit in the rectangle ({m}^{n})"
        ));
    }
    let conj = lambda.conjugate();
    let parts: Vec<u32> = (1..=m as usize)
        .rev()
        .map(|j| n as u32 - conj.part(j))
        .collect();
    Ok(Partition::new(parts))
}

/// Linear extension for type A Gram-Schmidt: fixed weight, lexicographic,
/// smallest first (so dominated partitions come no later than dominating ones
/// is NOT guaranteed by lex alone; dominance is checked separately).
pub fn graded_lex_order(a: &Partition, b: &Partition) -> Ordering {
    a.weight()
        .cmp(&b.weight())
        .then_with(|| a.parts.cmp(&b.parts))
}

/// All partitions mu <= lambda in type A dominance (same weight), sorted by
/// the graded-lex linear extension, smallest first, lambda included last.
pub fn dominance_downset_a(lambda: &Partition) -> Vec<Partition> {
    let mut set: Vec<Partition> = partitions_of(lambda.weight())
        .into_iter()
        .filter(|mu| dominance_leq_a(mu, lambda))
        .collect();
    set.sort_by(graded_lex_order);
    set
}

/// All partitions mu <= lambda in BC dominance with length <= n, sorted by
/// weight then lex, smallest first, lambda included last.
pub fn dominance_downset_bc(lambda: &Partition, n: usize) -> Vec<Partition> {
    let mut set = Vec::new();
    for d in 0..=lambda.weight() {
        for mu in partitions_of(d) {
            if mu.length() <= n && dominance_leq_bc(&mu, lambda) {
                set.push(mu);
            }
        }
    }
    set.sort_by(graded_lex_order);
    set
}
