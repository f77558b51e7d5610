//! Nilpotent orbits of `sl_n` as partitions of `n`.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let longest = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=longest)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `self ≤ other` in dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the orbit, `n² − Σ (πᵗ_j)²`.
    pub fn orbit_dim(&self) -> usize {
        let n = self.size();
        n * n - self.transpose().0.iter().map(|c| c * c).sum::<usize>()
    }

    /// Names among `zero`, `min`, `subreg`, `reg` that apply to this orbit.
    pub fn labels(&self) -> Vec<&'static str> {
        let n = self.size();
        let mut out = Vec::new();
        if self.0 == vec![1; n] {
            out.push("zero");
        }
        if n >= 2 && *self == Partition::new([vec![2], vec![1; n - 2]].concat()) {
            out.push("min");
        }
        if n >= 2 && *self == Partition::new(vec![n - 1, 1]) {
            out.push("subreg");
        }
        if self.0 == vec![n] {
            out.push("reg");
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Partitions of `n`, largest first in lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Levi block sizes of `p_Σ`: maximal runs of consecutive marked simple roots.
pub fn levi_blocks(sigma: &[usize], n: usize) -> Partition {
    let mut blocks = Vec::new();
    let mut run = 1;
    for i in 1..n {
        if sigma.contains(&i) {
            run += 1;
        } else {
            blocks.push(run);
            run = 1;
        }
    }
    blocks.push(run);
    Partition::new(blocks)
}

/// `|Δ_+^u|` for `p_Σ`.
pub fn nilradical_size(sigma: &[usize], n: usize) -> usize {
    n * (n - 1) / 2
        - levi_blocks(sigma, n)
            .0
            .iter()
            .map(|b| b * (b - 1) / 2)
            .sum::<usize>()
}

/// The Richardson orbit of `p_Σ`: the transpose of the Levi block partition.
pub fn richardson(sigma: &[usize], n: usize) -> Partition {
    let out = levi_blocks(sigma, n).transpose();
    assert_eq!(
        out.orbit_dim(),
        2 * nilradical_size(sigma, n),
        "Richardson orbit has the wrong dimension"
    );
    out
}

/// `λ_q = [q^r, s]` with `n = qr + s`, `0 ≤ s < q`.
pub fn orbit_q(n: usize, q: usize) -> Partition {
    assert!(q >= 1, "q must be positive");
    let (r, s) = (n / q, n % q);
    Partition::new([vec![q; r], vec![s]].concat())
}

/// One row of the orbit table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRow {
    pub partition: Partition,
    pub dim: usize,
    pub labels: Vec<&'static str>,
    /// Orbits directly below in the closure order.
    pub covers: Vec<Partition>,
    /// Every `Σ` whose parabolic has this Richardson orbit.
    pub sigmas: Vec<Vec<usize>>,
}

impl OrbitRow {
    pub fn to_json(&self) -> Value {
        json!({
            "partition": self.partition.0,
            "dim": self.dim,
            "labels": self.labels,
            "covers": self.covers.iter().map(|p| p.0.clone()).collect::<Vec<_>>(),
            "sigmas": self.sigmas,
        })
    }
}

/// The Hasse diagram of nilpotent orbits of `sl_n` with Richardson data.
pub fn orbit_table(n: usize) -> Vec<OrbitRow> {
    let parts = all_partitions(n);
    let leq = |a: &Partition, b: &Partition| a.dominance_leq(b).expect("same size");
    let sigmas = super::omega::all_sigmas(n);
    parts
        .iter()
        .map(|p| {
            let below: Vec<&Partition> = parts.iter().filter(|x| *x != p && leq(x, p)).collect();
            let covers = below
                .iter()
                .filter(|x| !below.iter().any(|y| y != *x && leq(x, y)))
                .map(|x| (*x).clone())
                .collect();
            OrbitRow {
                partition: p.clone(),
                dim: p.orbit_dim(),
                labels: p.labels(),
                covers,
                sigmas: sigmas
                    .iter()
                    .filter(|s| richardson(s, n) == *p)
                    .cloned()
                    .collect(),
            }
        })
        .collect()
}
