//! Integer partitions, Young diagrams and the `S_N` quantities attached to
//! them.
//!
//! A [`Partition`] of `n` labels a Young diagram with `n` boxes, an irrep of
//! `S_n`, and (as a [`CycleType`]) a conjugacy class of `S_n`. Lists of
//! partitions are always produced in reverse-lexicographic order, so the
//! totally symmetric `[n]` comes first and the totally antisymmetric `[1^n]`
//! last.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::numeric::small_factorial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is non-empty, strictly positive and
    /// non-increasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(invalid(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("partition parts must be non-increasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros before validating.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// `[n]`.
    pub fn row(n: usize) -> Self {
        assert!(n > 0);
        Partition { parts: vec![n] }
    }

    /// `[1^n]`.
    pub fn column(n: usize) -> Self {
        assert!(n > 0);
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length `i`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols).map(|c| self.parts.iter().take_while(|&&r| r > c).count()).collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks.push((len - c - 1) + (conj.parts[c] - r - 1) + 1);
            }
        }
        hooks
    }

    /// `Δ[p]`: the dimension of the irrep, by the hook-length formula.
    pub fn irrep_dimension(&self) -> u64 {
        let n = self.n();
        assert!(n <= 20, "irrep_dimension supports n ≤ 20");
        let mut num: u128 = small_factorial(n) as u128;
        for h in self.hook_lengths() {
            debug_assert_eq!(num % h as u128, 0);
            num /= h as u128;
        }
        num as u64
    }

    /// Content `column - row` of every box, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.n());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                out.push(c as i64 - r as i64);
            }
        }
        out
    }

    /// Compact bracket-free notation, e.g. `21^2`, `2^21`, `1^{10}`.
    pub fn notation(&self) -> String {
        let mut s = String::new();
        if self.parts.iter().any(|&p| p >= 10) {
            for (i, p) in self.parts.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{p}"));
            }
            return s;
        }
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            s.push_str(&format!("{p}"));
            match run {
                1 => {}
                2..=9 => s.push_str(&format!("^{run}")),
                _ => s.push_str(&format!("^{{{run}}}")),
            }
            i += run;
        }
        s
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.notation())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[21^2]`, `21^2`, `211`, `2,1,1`, `2^21`, `1^{10}`.
    ///
    /// In the compact form every digit is one part and an exponent is a
    /// single digit unless braced.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        if t.is_empty() {
            return Err(invalid("empty partition"));
        }
        if t.contains(',') {
            let parts = t
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| invalid(format!("bad part `{x}` in `{s}`"))))
                .collect::<Result<Vec<_>>>()?;
            return Partition::new(parts);
        }
        let chars: Vec<char> = t.chars().collect();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let d =
                chars[i].to_digit(10).ok_or_else(|| invalid(format!("unexpected `{}` in partition `{s}`", chars[i])))?
                    as usize;
            i += 1;
            let mut run = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                if i < chars.len() && chars[i] == '{' {
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == '}')
                        .ok_or_else(|| invalid(format!("unclosed exponent in `{s}`")))?;
                    let digits: String = chars[i + 1..i + close].iter().collect();
                    run = digits.parse().map_err(|_| invalid(format!("bad exponent in `{s}`")))?;
                    i += close + 1;
                } else {
                    run = chars
                        .get(i)
                        .and_then(|c| c.to_digit(10))
                        .ok_or_else(|| invalid(format!("missing exponent in `{s}`")))?
                        as usize;
                    i += 1;
                }
            }
            parts.extend(core::iter::repeat_n(d, run));
        }
        Partition::new(parts)
    }
}

/// A conjugacy class of `S_n`, labeled by its cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn identity(n: usize) -> Self {
        CycleType(Partition::column(n))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.0.parts().iter().map(|&c| c - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Order of the centralizer, `z_c = Π i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u64 {
        let mut z: u64 = 1;
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let len = parts[i];
            let m = parts[i..].iter().take_while(|&&q| q == len).count();
            z *= (len as u64).pow(m as u32) * small_factorial(m);
            i += m;
        }
        z
    }

    /// Number of permutations with this cycle type, `n!/z_c`.
    pub fn class_size(&self) -> u64 {
        small_factorial(self.n()) / self.centralizer_order()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All partitions of `n`, `[n]` first and `[1^n]` last.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(invalid("partitions_of requires n ≥ 1"));
    }
    Ok(bounded_partitions(n, n, n).into_iter().map(|parts| Partition { parts }).collect())
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    bounded_partitions(n, n, n).len()
}

/// Partitions of `x` into at most `max_parts` parts, each part at most
/// `max_part`, reverse-lexicographic. `x = 0` yields one empty list.
pub fn bounded_partitions(x: usize, max_parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(x, max_parts, max_part, &mut cur, &mut out);
    out
}

fn fill(x: usize, slots: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if x == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for k in (1..=cap.min(x)).rev() {
        // remaining slots must be able to hold x - k with parts ≤ k
        if (x - k) > k * (slots - 1) {
            break;
        }
        cur.push(k);
        fill(x - k, slots - 1, k, cur, out);
        cur.pop();
    }
}

pub fn irrep_dimension(p: &Partition) -> u64 {
    p.irrep_dimension()
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn class_size(c: &CycleType) -> u64 {
    c.class_size()
}

/// A standard Young tableau, stored as the row index holding each of
/// `1..=n` in turn.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<usize>,
}

impl StandardTableau {
    /// Row holding entry `k` (1-based entry, 0-based row).
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        let len = self.rows.iter().max().map_or(0, |&r| r + 1);
        let mut parts = vec![0; len];
        for &r in &self.rows {
            parts[r] += 1;
        }
        Partition { parts }
    }

    /// Content of the box holding each entry `1..=n`.
    pub fn contents(&self) -> Vec<i64> {
        let mut filled: Vec<usize> = Vec::new();
        let mut out = Vec::with_capacity(self.rows.len());
        for &r in &self.rows {
            if filled.len() <= r {
                filled.resize(r + 1, 0);
            }
            out.push(filled[r] as i64 - r as i64);
            filled[r] += 1;
        }
        out
    }
}

/// All standard tableaux of shape `p`, ordered lexicographically by row word.
pub fn standard_tableaux(p: &Partition) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut filled = vec![0usize; p.len()];
    let mut rows = Vec::with_capacity(p.n());
    grow_tableaux(p, &mut filled, &mut rows, &mut out);
    out
}

fn grow_tableaux(p: &Partition, filled: &mut [usize], rows: &mut Vec<usize>, out: &mut Vec<StandardTableau>) {
    if rows.len() == p.n() {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..p.len() {
        let fits = filled[r] < p.parts[r] && (r == 0 || filled[r - 1] > filled[r]);
        if fits {
            filled[r] += 1;
            rows.push(r);
            grow_tableaux(p, filled, rows, out);
            rows.pop();
            filled[r] -= 1;
        }
    }
}
