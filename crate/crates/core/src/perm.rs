//! Permutations of `{0, …, n-1}` in one-line notation.
//!
//! The same type stores group elements (`i ↦ σ(i)`) and sector orderings
//! (`position k ↦ particle at k`). Relabeling an ordering `p` by `c` is the
//! composition `c ∘ p`; reversing it is `p ∘ w₀`.

use alloc::vec::Vec;
use core::fmt;

use crate::partition::{CycleType, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Returns `None` unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    /// The order-reversing permutation `w₀ = (0 n-1)(1 n-2)…`.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (0..n).rev().collect() }
    }

    /// Transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `(0 1 … n-1)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// The ordering read backwards, `self ∘ w₀`.
    pub fn reversed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.reverse();
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType(Partition::from_unsorted(self.cycle_lengths()).expect("n ≥ 1"))
    }

    pub fn sign(&self) -> i64 {
        let odd = self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position of this permutation in lexicographic order (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        let mut used = alloc::vec![false; n];
        for (k, &v) in self.images.iter().enumerate() {
            let smaller = (0..v).filter(|&u| !used[u]).count();
            rank = rank * (n - k) + smaller;
            used[v] = true;
        }
        rank
    }

    /// Ordering string with 1-based particle labels, e.g. `4231`.
    pub fn ordering_label(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        let sep = self.n() >= 10;
        for (k, &v) in self.images.iter().enumerate() {
            if sep && k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}", v + 1);
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ordering_label())
    }
}

/// All permutations of `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}
