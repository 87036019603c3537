//! Brute-force counters for d-fold partition diamonds.
//!
//! A d-fold partition diamond is a pair of integer families `{a_k}`,
//! `{b_{j,k}}` (`0 <= j <= d-1`) with `a_k >= b_{j,k} >= a_{k+1}` for every
//! `j` and `k` — the graph semantics, where each of the `d` middle nodes of a
//! diamond sits between its neighbouring central nodes. Its size is the sum
//! of all nodes; its Schmidt size is the sum of the central nodes `a_k`.
//!
//! These counters are deliberately independent of the generating-function
//! machinery: they enumerate (or count by elementary dynamic programming)
//! actual configurations, and exist to validate the product expansions.

use crate::ring::Int;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;

/// A concrete d-fold partition diamond witness.
///
/// `a` is the weakly decreasing central chain with trailing zeros trimmed;
/// `b[k]` lists the `d` middle values between `a_k` and `a_{k+1}` (the chain
/// is padded with `a_{len} = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondConfig {
    pub a: Vec<u32>,
    pub b: Vec<Vec<u32>>,
}

impl DiamondConfig {
    /// Total size: sum of central and middle nodes.
    pub fn size(&self) -> u64 {
        let sa: u64 = self.a.iter().map(|&x| x as u64).sum();
        let sb: u64 = self.b.iter().flatten().map(|&x| x as u64).sum();
        sa + sb
    }

    /// Schmidt size: sum of the central nodes only.
    pub fn schmidt_size(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }

    /// Check the defining inequalities `a_k >= b_{j,k} >= a_{k+1}`.
    pub fn is_valid(&self, d: usize) -> bool {
        if self.a.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        if self.b.len() != self.a.len() {
            return false;
        }
        for (k, row) in self.b.iter().enumerate() {
            let hi = self.a[k];
            let lo = self.a.get(k + 1).copied().unwrap_or(0);
            if row.len() != d || row.iter().any(|&v| v > hi || v < lo) {
                return false;
            }
        }
        true
    }
}

/// Enumerate the weakly decreasing positive chains summing to `n`
/// (partitions of `n`).
fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = n.min(max);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of diamonds with Schmidt size `n`: for each central partition the
/// `d` middle nodes of segment `k` range freely over `[a_{k+1}, a_k]`, so
/// each partition contributes `prod_k (a_k - a_{k+1} + 1)^d`.
pub fn brute_schmidt_count(d: usize, n: usize) -> Int {
    assert!(d >= 1);
    let mut total = Int::zero();
    for a in partitions_of(n as u32) {
        let mut prod = Int::one();
        for k in 0..a.len() {
            let lo = a.get(k + 1).copied().unwrap_or(0);
            let span = Int::from(a[k] - lo + 1);
            prod *= span.pow(d as u32);
        }
        total += prod;
    }
    total
}

/// Schmidt count by explicit middle-node enumeration; exponentially slower
/// than [`brute_schmidt_count`] and used to cross-validate it.
pub fn brute_schmidt_count_explicit(d: usize, n: usize) -> Int {
    assert!(d >= 1);
    let mut total = Int::zero();
    for a in partitions_of(n as u32) {
        let mut count = Int::one();
        for k in 0..a.len() {
            let lo = a.get(k + 1).copied().unwrap_or(0);
            let choices = (a[k] - lo + 1) as u64;
            let mut row = Int::zero();
            // explicit d-fold loop over the row, counted one tuple at a time
            let mut stack = vec![0u64; d];
            loop {
                row += Int::one();
                let mut idx = 0;
                loop {
                    stack[idx] += 1;
                    if stack[idx] < choices {
                        break;
                    }
                    stack[idx] = 0;
                    idx += 1;
                    if idx == d {
                        break;
                    }
                }
                if idx == d {
                    break;
                }
            }
            count *= row;
        }
        total += count;
    }
    total
}

/// Number of diamonds of total size `n`, by recursive enumeration over the
/// central chain with memoized counts for the middle rows.
///
/// `ways[d][span][s]` counts d-tuples in `[0, span]^d` with sum `s`; a
/// segment from `top` down to `next` then contributes
/// `ways[d][top-next][s - d*next]` middle configurations of sum `s`.
pub fn brute_size_count(d: usize, n: usize) -> Int {
    assert!(d >= 1);
    let ways = BoundedTupleTable::new(d, n);
    // count(top, budget): diamonds continuing below a central node `top`
    // with `budget` size left for everything strictly below it.
    fn count(
        d: usize,
        top: usize,
        budget: usize,
        ways: &BoundedTupleTable,
        memo: &mut HashMap<(usize, usize), Int>,
    ) -> Int {
        if top == 0 {
            return if budget == 0 { Int::one() } else { Int::zero() };
        }
        if let Some(v) = memo.get(&(top, budget)) {
            return v.clone();
        }
        let mut acc = Int::zero();
        // next central value v, middle row sum d*v + s with s <= d*(top - v)
        for v in 0..=top.min(budget) {
            let after_v = budget - v;
            let row_min = d * v;
            if row_min > after_v {
                continue;
            }
            let span = top - v;
            let max_s = (d * span).min(after_v - row_min);
            for s in 0..=max_s {
                let w = ways.get(span, s);
                if w.is_zero() {
                    continue;
                }
                let rest = after_v - row_min - s;
                if v == 0 {
                    // chain ends here; everything below is zero
                    if rest == 0 {
                        acc += w;
                    }
                } else {
                    acc += w * count(d, v, rest, ways, memo);
                }
            }
        }
        memo.insert((top, budget), acc.clone());
        acc
    }

    if n == 0 {
        return Int::one();
    }
    let mut memo = HashMap::new();
    let mut total = Int::zero();
    for a0 in 1..=n {
        total += count(d, a0, n - a0, &ways, &mut memo);
    }
    total
}

/// Counts of d-tuples in `[0, span]^d` by sum.
struct BoundedTupleTable {
    d: usize,
    rows: Vec<Vec<Int>>, // rows[span][s]
}

impl BoundedTupleTable {
    fn new(d: usize, max_span: usize) -> Self {
        let mut rows = Vec::with_capacity(max_span + 1);
        for span in 0..=max_span {
            let mut row = vec![Int::zero(); d * span + 1];
            row[0] = Int::one();
            // d convolutions with the all-ones window of length span+1
            for _ in 0..d {
                let mut next = vec![Int::zero(); d * span + 1];
                for s in 0..row.len() {
                    if row[s].is_zero() {
                        continue;
                    }
                    for v in 0..=span {
                        if s + v < next.len() {
                            next[s + v] += &row[s];
                        }
                    }
                }
                row = next;
            }
            rows.push(row);
        }
        BoundedTupleTable { d, rows }
    }

    fn get(&self, span: usize, s: usize) -> Int {
        if s > self.d * span {
            return Int::zero();
        }
        self.rows[span][s].clone()
    }
}

/// Size count by fully explicit enumeration of witnesses; used both to
/// cross-validate [`brute_size_count`] and to dump configurations.
pub fn enumerate_diamonds_by_size(d: usize, n: usize) -> Vec<DiamondConfig> {
    let mut out = Vec::new();
    // depth-first over central values; budget is the remaining size
    fn rec(
        d: usize,
        top: u32,
        budget: u32,
        a: &mut Vec<u32>,
        b: &mut Vec<Vec<u32>>,
        out: &mut Vec<DiamondConfig>,
    ) {
        if top == 0 {
            if budget == 0 {
                out.push(DiamondConfig {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
            return;
        }
        for v in (0..=top.min(budget)).rev() {
            let rest = budget - v;
            let mut row = vec![v; d];
            loop {
                let row_sum: u32 = row.iter().sum();
                if row_sum <= rest {
                    a.push(v);
                    b.push(row.clone());
                    if v == 0 {
                        if rest == row_sum {
                            // trailing zero in `a` is trimmed from the witness
                            let config = DiamondConfig {
                                a: a[..a.len() - 1].to_vec(),
                                b: b.clone(),
                            };
                            out.push(config);
                        }
                    } else {
                        rec(d, v, rest - row_sum, a, b, out);
                    }
                    a.pop();
                    b.pop();
                }
                // advance the row odometer within [v, top]
                let mut idx = 0;
                loop {
                    row[idx] += 1;
                    if row[idx] <= top {
                        break;
                    }
                    row[idx] = v;
                    idx += 1;
                    if idx == d {
                        break;
                    }
                }
                if idx == d {
                    break;
                }
            }
        }
    }
    if n == 0 {
        return vec![DiamondConfig {
            a: Vec::new(),
            b: Vec::new(),
        }];
    }
    for a0 in 1..=n as u32 {
        let mut a = vec![a0];
        let mut b = Vec::new();
        rec(d, a0, n as u32 - a0, &mut a, &mut b, &mut out);
    }
    out
}

/// Enumerate witnesses with a given Schmidt size (middle nodes free).
pub fn enumerate_diamonds_by_schmidt(d: usize, n: usize) -> Vec<DiamondConfig> {
    let mut out = Vec::new();
    for a in partitions_of(n as u32) {
        let segments: Vec<(u32, u32)> = (0..a.len())
            .map(|k| (a.get(k + 1).copied().unwrap_or(0), a[k]))
            .collect();
        // odometer over all middle rows
        let mut rows: Vec<Vec<u32>> = segments.iter().map(|&(lo, _)| vec![lo; d]).collect();
        loop {
            out.push(DiamondConfig {
                a: a.clone(),
                b: rows.clone(),
            });
            let mut k = 0;
            let mut j = 0;
            loop {
                if k == rows.len() {
                    break;
                }
                let (lo, hi) = segments[k];
                rows[k][j] += 1;
                if rows[k][j] <= hi {
                    break;
                }
                rows[k][j] = lo;
                j += 1;
                if j == d {
                    j = 0;
                    k += 1;
                }
            }
            if k == rows.len() {
                break;
            }
        }
    }
    out
}
