//! Strong Bruhat order on `S_n` and lower intervals `[id, w]`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::QPolynomial;

/// `u <= w` in strong Bruhat order, by the prefix dominance criterion:
/// for every prefix length `i` and threshold `k`,
/// `#{j <= i : u(j) >= k} <= #{j <= i : w(j) >= k}`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    let n = u.size();
    if n != w.size() {
        return Err(Error::SizeMismatch {
            left: n,
            right: w.size(),
        });
    }
    let (mut seen_u, mut seen_w) = (0u64, 0u64);
    for (&a, &b) in u.bytes().iter().zip(w.bytes()) {
        seen_u |= 1 << (a - 1);
        seen_w |= 1 << (b - 1);
        if seen_u == seen_w {
            continue;
        }
        for k in 0..n {
            if (seen_u >> k).count_ones() > (seen_w >> k).count_ones() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The lower interval `[id, top]` with its rank tally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatInterval {
    top: Permutation,
    elements: Vec<Permutation>,
    rank_counts: Vec<u64>,
}

impl BruhatInterval {
    pub fn top(&self) -> &Permutation {
        &self.top
    }

    /// Elements sorted lexicographically.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// `rank_counts[k]` = number of elements of length `k`.
    pub fn rank_counts(&self) -> &[u64] {
        &self.rank_counts
    }

    /// `B_w`.
    pub fn size(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn poincare_polynomial(&self) -> QPolynomial {
        QPolynomial::from_counts(&self.rank_counts)
    }

    pub fn contains(&self, u: &Permutation) -> bool {
        self.elements.binary_search(u).is_ok()
    }

    /// Cover relations `(lower, upper)` as indices into [`Self::elements`]:
    /// `upper = lower * t_ij` with length exactly one more.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let index: HashMap<&Permutation, usize> =
            self.elements.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let n = self.top.size();
        let mut covers = Vec::new();
        for (lo, u) in self.elements.iter().enumerate() {
            let len = u.length();
            for i in 1..n {
                for j in i + 1..=n {
                    if u.get(i) > u.get(j) {
                        continue;
                    }
                    let v = u.swap_positions(i, j);
                    if v.length() != len + 1 {
                        continue;
                    }
                    if let Some(&hi) = index.get(&v) {
                        covers.push((lo, hi));
                    }
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    pub fn summary(&self) -> IntervalSummary {
        IntervalSummary {
            w: self.top.clone(),
            size: self.size(),
            rank_counts: self.rank_counts.clone(),
        }
    }
}

/// JSON form of an interval: `{"w": ..., "B_w": ..., "rank_counts": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSummary {
    pub w: Permutation,
    #[serde(rename = "B_w")]
    pub size: u64,
    pub rank_counts: Vec<u64>,
}

/// Downward breadth-first search from `w` along every length-decreasing
/// transposition `u -> u * t_ij`.
pub fn lower_interval(w: &Permutation) -> BruhatInterval {
    let mut elements = if w.size() <= 16 {
        search_down(w, pack_nibbles)
    } else {
        search_down(w, |b: &[u8]| b.to_vec())
    };
    elements.sort_unstable();
    let mut rank_counts = vec![0u64; w.length() + 1];
    for u in &elements {
        rank_counts[u.length()] += 1;
    }
    BruhatInterval {
        top: w.clone(),
        elements,
        rank_counts,
    }
}

fn pack_nibbles(b: &[u8]) -> u64 {
    b.iter().fold(0u64, |acc, &v| acc << 4 | (v - 1) as u64)
}

fn search_down<K: Hash + Eq>(w: &Permutation, key: impl Fn(&[u8]) -> K) -> Vec<Permutation> {
    let n = w.size();
    let mut seen = HashSet::new();
    seen.insert(key(w.bytes()));
    let mut queue = VecDeque::from([w.bytes().to_vec()]);
    let mut out = Vec::new();
    while let Some(u) = queue.pop_front() {
        for i in 0..n {
            for j in i + 1..n {
                if u[i] < u[j] {
                    continue;
                }
                let mut v = u.clone();
                v.swap(i, j);
                if seen.insert(key(&v)) {
                    queue.push_back(v);
                }
            }
        }
        out.push(Permutation::from_bytes_unchecked(u));
    }
    out
}

/// `P_w(q) = sum over u <= w of q^{l(u)}`.
pub fn poincare_polynomial(w: &Permutation) -> QPolynomial {
    lower_interval(w).poincare_polynomial()
}

/// `B_w = #[id, w] = P_w(1)`.
pub fn interval_size(w: &Permutation) -> u64 {
    lower_interval(w).size()
}
