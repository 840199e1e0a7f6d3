//! Restriction of `S_N` irreps to Young subgroups `S_{N₁} × S_{N₂} × …`.
//!
//! A pattern `(N₁N₂…)_B` admits irrep `[p]` once for every copy of the
//! trivial irrep of the subgroup inside `[p]`; `(N₁N₂…)_F` does the same
//! for the sign irrep. By Young's rule these are Kostka numbers of `p` (or
//! its conjugate) with content `N₁, N₂, …`. The character inner product
//! over the subgroup gives the same numbers by an independent route.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::character::{character, kostka_by_weights};
use crate::error::{invalid, Error, Result};
use crate::numeric::small_factorial;
use crate::oscillator::{shell_reduction, LambdaReductions, MultiplicityVector};
use crate::partition::{partitions_of, CycleType, Partition};
use crate::MAX_PARTICLES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistics {
    Bose,
    Fermi,
}

impl Statistics {
    pub fn letter(self) -> char {
        match self {
            Statistics::Bose => 'B',
            Statistics::Fermi => 'F',
        }
    }
}

impl FromStr for Statistics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "b" | "bose" | "boson" | "bosons" => Ok(Statistics::Bose),
            "f" | "fermi" | "fermion" | "fermions" => Ok(Statistics::Fermi),
            _ => Err(invalid(format!("unknown statistics `{s}`"))),
        }
    }
}

/// Occupations of distinguishable components, e.g. `(22)_F`.
///
/// Counts are kept non-increasing: `(13)_F` and `(31)_F` describe the same
/// system. When every count is 1 the statistics are irrelevant and the
/// pattern is stored as Bose.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentPattern {
    counts: Partition,
    statistics: Statistics,
}

impl ComponentPattern {
    pub fn new(counts: Vec<usize>, statistics: Statistics) -> Result<Self> {
        if counts.contains(&0) {
            return Err(invalid("component occupations must be positive"));
        }
        let counts = Partition::from_unsorted(counts)?;
        let statistics = if counts.parts().iter().all(|&c| c == 1) { Statistics::Bose } else { statistics };
        Ok(ComponentPattern { counts, statistics })
    }

    /// Distinguishable particles, `(1^N)`.
    pub fn distinguishable(n: usize) -> Self {
        ComponentPattern { counts: Partition::column(n), statistics: Statistics::Bose }
    }

    pub fn counts(&self) -> &[usize] {
        self.counts.parts()
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn n(&self) -> usize {
        self.counts.n()
    }

    pub fn components(&self) -> usize {
        self.counts.len()
    }

    pub fn is_distinguishable(&self) -> bool {
        self.counts.parts().iter().all(|&c| c == 1)
    }

    /// The subgroup irrep that must appear: a row per component for bosons,
    /// a column per component for fermions.
    pub fn subgroup_irrep(&self) -> YoungSubgroupIrrep {
        let factors = self
            .counts()
            .iter()
            .map(|&k| match self.statistics {
                Statistics::Bose => Partition::row(k),
                Statistics::Fermi => Partition::column(k),
            })
            .collect();
        YoungSubgroupIrrep { factors }
    }
}

impl fmt::Display for ComponentPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.counts().iter().any(|&c| c >= 10);
        f.write_str("(")?;
        for (i, c) in self.counts().iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")?;
        if !self.is_distinguishable() {
            write!(f, "_{}", self.statistics.letter())?;
        }
        Ok(())
    }
}

impl FromStr for ComponentPattern {
    type Err = Error;

    /// Accepts `(22)_F`, `22F`, `(2,2)_B`, `(1111)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, stats) = match t.char_indices().last() {
            Some((i, c)) if c.is_ascii_alphabetic() => {
                let body = t[..i].trim_end_matches('_');
                (body, Some(c.to_string().parse::<Statistics>()?))
            }
            _ => (t, None),
        };
        let body = body.trim().trim_start_matches('(').trim_end_matches(')');
        let counts: Vec<usize> = if body.contains(',') {
            body.split(',')
                .map(|x| x.trim().parse().map_err(|_| invalid(format!("bad occupation in `{s}`"))))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| invalid(format!("bad pattern `{s}`"))))
                .collect::<Result<_>>()?
        };
        if counts.is_empty() {
            return Err(invalid("empty component pattern"));
        }
        let all_ones = counts.iter().all(|&c| c == 1);
        match stats {
            Some(st) => ComponentPattern::new(counts, st),
            None if all_ones => ComponentPattern::new(counts, Statistics::Bose),
            None => Err(invalid(format!("pattern `{s}` needs a _B or _F suffix"))),
        }
    }
}

/// Row order of the printed branching and degeneracy tables: every
/// partition of `n` except `1^n`, bosons first, then fermions.
pub fn table_patterns(n: usize) -> Result<Vec<ComponentPattern>> {
    let shapes: Vec<Partition> = partitions_of(n)?.into_iter().filter(|p| p.len() < n).collect();
    let mut out = Vec::new();
    for st in [Statistics::Bose, Statistics::Fermi] {
        for p in &shapes {
            out.push(ComponentPattern::new(p.parts().to_vec(), st)?);
        }
    }
    Ok(out)
}

/// An irrep `[q₁] × [q₂] × …` of the Young subgroup acting on consecutive
/// blocks of particles. Particles beyond the listed factors each get a
/// trivial `[1]` factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungSubgroupIrrep {
    factors: Vec<Partition>,
}

impl YoungSubgroupIrrep {
    pub fn new(factors: Vec<Partition>) -> Result<Self> {
        if factors.is_empty() {
            return Err(invalid("subgroup irrep needs at least one factor"));
        }
        Ok(YoungSubgroupIrrep { factors })
    }

    pub fn factors(&self) -> &[Partition] {
        &self.factors
    }

    /// Particles covered by the listed factors.
    pub fn covered(&self) -> usize {
        self.factors.iter().map(Partition::n).sum()
    }

    /// Factors padded with `[1]` up to `n` particles.
    pub fn padded(&self, n: usize) -> Result<Vec<Partition>> {
        let covered = self.covered();
        if covered > n {
            return Err(Error::SizeMismatch { expected: n, found: covered });
        }
        let mut f = self.factors.clone();
        f.extend(core::iter::repeat_n(Partition::row(1), n - covered));
        Ok(f)
    }

    /// Block sizes of the padded subgroup.
    pub fn blocks(&self, n: usize) -> Result<Vec<usize>> {
        Ok(self.padded(n)?.iter().map(Partition::n).collect())
    }

    /// Dimension of the subgroup irrep, `Π Δ[qᵢ]`.
    pub fn dimension(&self) -> u64 {
        self.factors.iter().map(Partition::irrep_dimension).product()
    }

    pub fn notation(&self) -> String {
        let shown: Vec<&Partition> = self.factors.iter().filter(|q| q.n() > 1).collect();
        let list: Vec<&Partition> = if shown.is_empty() { self.factors.iter().collect() } else { shown };
        let mut s = String::new();
        for (i, q) in list.iter().enumerate() {
            if i > 0 {
                s.push('x');
            }
            s.push_str(&format!("{q}"));
        }
        s
    }
}

impl fmt::Display for YoungSubgroupIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

impl FromStr for YoungSubgroupIrrep {
    type Err = Error;

    /// Factors separated by `x` or `×`, each a partition: `1^2x1^2`,
    /// `[1^2]x[1^2]`, `1x1`.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s.split(['x', 'X', '×']).map(|f| f.trim().parse::<Partition>()).collect::<Result<Vec<_>>>()?;
        YoungSubgroupIrrep::new(factors)
    }
}

/// All tuples of cycle types, one per block, with the product of their
/// class sizes.
fn block_classes(blocks: &[usize]) -> Result<Vec<(Vec<CycleType>, u64)>> {
    let mut acc: Vec<(Vec<CycleType>, u64)> = alloc::vec![(Vec::new(), 1)];
    for &b in blocks {
        let classes = partitions_of(b)?;
        let mut next = Vec::with_capacity(acc.len() * classes.len());
        for (tuple, size) in &acc {
            for c in &classes {
                let ct = CycleType(c.clone());
                let mut t = tuple.clone();
                let s = size * ct.class_size();
                t.push(ct);
                next.push((t, s));
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Multiplicity of `target` in the restriction of `[p]` to the Young
/// subgroup, by the character inner product over the subgroup.
pub fn restriction_multiplicity(p: &Partition, target: &YoungSubgroupIrrep) -> Result<u64> {
    let n = p.n();
    if n > MAX_PARTICLES {
        return Err(invalid(format!("at most {MAX_PARTICLES} particles")));
    }
    let factors = target.padded(n)?;
    let blocks: Vec<usize> = factors.iter().map(Partition::n).collect();
    let order: u64 = blocks.iter().map(|&b| small_factorial(b)).product();
    let mut sum: i128 = 0;
    for (tuple, size) in block_classes(&blocks)? {
        let mut cycles = Vec::with_capacity(n);
        let mut sub: i128 = 1;
        for (ct, q) in tuple.iter().zip(&factors) {
            cycles.extend_from_slice(ct.partition().parts());
            sub *= character(q, ct) as i128;
        }
        if sub == 0 {
            continue;
        }
        let whole = CycleType(Partition::from_unsorted(cycles)?);
        sum += size as i128 * sub * character(p, &whole) as i128;
    }
    if sum < 0 || sum % order as i128 != 0 {
        return Err(Error::AlgorithmViolation(format!("restriction of {p} to {target} is not integral")));
    }
    Ok((sum / order as i128) as u64)
}

fn check_sizes(p: &Partition, pattern: &ComponentPattern) -> Result<()> {
    if p.n() != pattern.n() {
        return Err(Error::SizeMismatch { expected: p.n(), found: pattern.n() });
    }
    Ok(())
}

/// Multiplicity of the pattern's subgroup irrep inside `[p]`, by Young's
/// rule.
pub fn branch_multiplicity(p: &Partition, pattern: &ComponentPattern) -> Result<u64> {
    check_sizes(p, pattern)?;
    let m = match pattern.statistics {
        Statistics::Bose => kostka_by_weights(p, pattern.counts()),
        Statistics::Fermi => kostka_by_weights(&p.conjugate(), pattern.counts()),
    };
    debug_assert!(p.n() > 7 || branch_multiplicity_by_characters(p, pattern).ok() == Some(m));
    Ok(m)
}

/// [`branch_multiplicity`] by the character inner product.
pub fn branch_multiplicity_by_characters(p: &Partition, pattern: &ComponentPattern) -> Result<u64> {
    check_sizes(p, pattern)?;
    restriction_multiplicity(p, &pattern.subgroup_irrep())
}

fn weighted(red: &MultiplicityVector, pattern: &ComponentPattern) -> Result<u64> {
    let mut total = 0;
    for (p, c) in red.iter() {
        if c > 0 {
            total += c * branch_multiplicity(p, pattern)?;
        }
    }
    Ok(total)
}

/// States of the `λ` subspace that are compatible with `pattern`.
pub fn component_degeneracy(n: usize, lambda: u32, pattern: &ComponentPattern) -> Result<u64> {
    let mut cache = LambdaReductions::new(n)?;
    component_degeneracy_cached(&mut cache, lambda, pattern)
}

/// [`component_degeneracy`] reusing an existing reduction cache.
pub fn component_degeneracy_cached(
    cache: &mut LambdaReductions,
    lambda: u32,
    pattern: &ComponentPattern,
) -> Result<u64> {
    if pattern.n() != cache.n() {
        return Err(Error::SizeMismatch { expected: cache.n(), found: pattern.n() });
    }
    let red = cache.get(lambda)?.clone();
    weighted(&red, pattern)
}

/// States of the whole shell `H_X` compatible with `pattern`.
pub fn cumulative_shell_degeneracy(n: usize, x: u64, pattern: &ComponentPattern) -> Result<u64> {
    if pattern.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: pattern.n() });
    }
    weighted(&shell_reduction(n, x)?, pattern)
}

/// Decomposition of `(ℂ^k)^{⊗N}` under `S_N`: `[p]` appears once per
/// semistandard tableau with entries `1..=k`, counted by the hook-content
/// formula `Π (k + c) / Π h`.
pub fn spin_decomposition(n: usize, k: usize) -> Result<MultiplicityVector> {
    if !(2..=MAX_PARTICLES).contains(&n) {
        return Err(invalid(format!("particle number must be in 2..={MAX_PARTICLES}, got {n}")));
    }
    if k == 0 {
        return Err(invalid("need at least one spin component"));
    }
    let counts = partitions_of(n)?
        .iter()
        .map(|p| {
            if p.len() > k {
                return 0;
            }
            let num: u128 = p.contents().iter().map(|&c| (k as i64 + c) as u128).product();
            let den: u128 = p.hook_lengths().iter().map(|&h| h as u128).product();
            (num / den) as u64
        })
        .collect();
    MultiplicityVector::from_counts(n, counts)
}
