//! Non-interacting (`g = 0`) bookkeeping.
//!
//! The energy shell `H_X` of the `N`-dimensional isotropic oscillator splits
//! into hypercylindrical subspaces `H_{ν_R, ν_ρ, λ}` with
//! `X = ν_R + 2ν_ρ + λ`. Which `S_N` irreps a subspace carries depends on
//! `λ` alone. Shell reductions come from Kostka numbers of the excitation
//! multisets; λ reductions are peeled off recursively by subtracting every
//! lower-λ subspace that shares the shell.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::character::kostka_by_weights;
use crate::error::{invalid, Error, Result};
use crate::numeric::{binomial, factorial, rising_product};
use crate::parity::Parity;
use crate::partition::{bounded_partitions, partitions_of, Partition};
use crate::MAX_PARTICLES;

/// Quantum numbers `(ν_R, ν_ρ, λ)`: center-of-mass, hyperradial and grand
/// angular excitations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HypercylindricalLabel {
    pub nu_r: u32,
    pub nu_rho: u32,
    pub lambda: u32,
}

impl HypercylindricalLabel {
    pub fn new(nu_r: u32, nu_rho: u32, lambda: u32) -> Self {
        HypercylindricalLabel { nu_r, nu_rho, lambda }
    }

    /// Total excitation `X = ν_R + 2ν_ρ + λ`.
    pub fn excitation(&self) -> u64 {
        self.nu_r as u64 + 2 * self.nu_rho as u64 + self.lambda as u64
    }

    /// `ħω (X + N/2)`.
    pub fn energy(&self, n: usize) -> Energy {
        Energy::from_excitation(self.excitation(), n)
    }

    /// `π = (-1)^λ`.
    pub fn relative_parity(&self) -> Parity {
        Parity::from_exponent(self.lambda as u64)
    }

    /// Key used to order levels of equal energy: `λ` ascending, then `ν_ρ`.
    pub fn level_order_key(&self) -> (u64, u32, u32) {
        (self.excitation(), self.lambda, self.nu_rho)
    }
}

impl fmt::Display for HypercylindricalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.nu_r, self.nu_rho, self.lambda)
    }
}

/// An energy in units of `ħω`, stored as twice its value so that the
/// `N/2` zero-point offset stays integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Energy {
    twice: u64,
}

impl Energy {
    pub fn from_excitation(x: u64, n: usize) -> Self {
        Energy { twice: 2 * x + n as u64 }
    }

    pub fn from_twice(twice: u64) -> Self {
        Energy { twice }
    }

    pub fn twice(&self) -> u64 {
        self.twice
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E = {}/2 \u{0127}\u{03c9}", self.twice)
    }
}

/// One non-negative count per partition of `N`, in [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    labels: Vec<Partition>,
    counts: Vec<u64>,
}

impl MultiplicityVector {
    pub fn zeros(n: usize) -> Result<Self> {
        let labels = partitions_of(n)?;
        let counts = alloc::vec![0; labels.len()];
        Ok(MultiplicityVector { labels, counts })
    }

    pub fn from_counts(n: usize, counts: Vec<u64>) -> Result<Self> {
        let labels = partitions_of(n)?;
        if labels.len() != counts.len() {
            return Err(Error::SizeMismatch { expected: labels.len(), found: counts.len() });
        }
        Ok(MultiplicityVector { labels, counts })
    }

    pub fn n(&self) -> usize {
        self.labels[0].n()
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, p: &Partition) -> u64 {
        self.labels.iter().position(|q| q == p).map_or(0, |i| self.counts[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.labels.iter().zip(self.counts.iter().copied())
    }

    /// `Σ count · Δ[p]`.
    pub fn dimension(&self) -> u64 {
        self.iter().map(|(p, c)| c * p.irrep_dimension()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn add_scaled(&mut self, other: &MultiplicityVector, k: u64) {
        debug_assert_eq!(self.labels, other.labels);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += k * b;
        }
    }

    /// Subtracts `k · other`, failing if any count would go negative.
    pub fn checked_sub_scaled(&mut self, other: &MultiplicityVector, k: u64) -> Option<()> {
        let next: Option<Vec<u64>> = self.counts.iter().zip(&other.counts).map(|(a, b)| a.checked_sub(k * b)).collect();
        self.counts = next?;
        Some(())
    }

    pub fn scaled(&self, k: u64) -> MultiplicityVector {
        MultiplicityVector { labels: self.labels.clone(), counts: self.counts.iter().map(|c| c * k).collect() }
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_PARTICLES {
        return Err(invalid(format!("particle number must be in {min}..={MAX_PARTICLES}, got {n}")));
    }
    Ok(())
}

/// `d^X_N = (X+N-1)! / (X! (N-1)!)`.
pub fn shell_dimension(n: usize, x: u64) -> Result<BigUint> {
    check_n(n, 2)?;
    Ok(binomial(x + n as u64 - 1, n as u64 - 1))
}

/// `ε^N_λ = (N+2λ-3)(λ+N-4)! / (λ!(N-3)!)` for `N > 3`; for `N = 3` it is
/// 1 at `λ = 0` and 2 otherwise.
pub fn hyperangular_dimension(n: usize, lambda: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::Unsupported(format!("hyperangular degeneracy is undefined for N = {n}")));
    }
    check_n(n, 3)?;
    if n == 3 {
        return Ok(BigUint::from(if lambda == 0 { 1u32 } else { 2u32 }));
    }
    let n = n as u64;
    let num = BigUint::from(n + 2 * lambda - 3) * rising_product(lambda + 1, lambda + n - 4);
    let den = factorial(n - 3);
    debug_assert_eq!(&num % &den, BigUint::from(0u32));
    Ok(num / den)
}

/// Reduction of the whole shell `H_X` into `S_N` irreps: for every
/// distribution of `X` quanta over `N` particles, the multiplicity of `[p]`
/// is the Kostka number of `p` with that excitation multiset.
pub fn shell_reduction(n: usize, x: u64) -> Result<MultiplicityVector> {
    check_n(n, 2)?;
    let mut out = MultiplicityVector::zeros(n)?;
    let x = usize::try_from(x).map_err(|_| invalid("excitation too large"))?;
    for occupied in bounded_partitions(x, n, x) {
        let mut weights = Vec::with_capacity(n);
        let zeros = n - occupied.len();
        if zeros > 0 {
            weights.push(zeros);
        }
        let mut i = 0;
        while i < occupied.len() {
            let run = occupied[i..].iter().take_while(|&&v| v == occupied[i]).count();
            weights.push(run);
            i += run;
        }
        for (slot, shape) in out.counts.iter_mut().zip(&out.labels) {
            *slot += kostka_by_weights(shape, &weights);
        }
    }
    Ok(out)
}

/// Memoized λ reductions for a fixed `N`.
///
/// Row `λ` needs every row below it, so the cache is a prefix that grows on
/// demand. Results are immutable once computed; sharing across threads is
/// left to the caller.
#[derive(Clone, Debug)]
pub struct LambdaReductions {
    n: usize,
    rows: Vec<MultiplicityVector>,
}

impl LambdaReductions {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Unsupported(format!("λ reduction is undefined for N = {n}")));
        }
        check_n(n, 3)?;
        Ok(LambdaReductions { n, rows: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows computed so far.
    pub fn computed(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&mut self, lambda: u32) -> Result<&MultiplicityVector> {
        self.extend_to(lambda)?;
        Ok(&self.rows[lambda as usize])
    }

    pub fn extend_to(&mut self, lambda: u32) -> Result<()> {
        while self.rows.len() <= lambda as usize {
            let l = self.rows.len() as u64;
            let mut red = shell_reduction(self.n, l)?;
            for lower in 0..l {
                let m = l - lower;
                // (ν_R, ν_ρ) with ν_R + 2ν_ρ = m
                let copies = m / 2 + 1;
                red.checked_sub_scaled(&self.rows[lower as usize], copies).ok_or_else(|| {
                    Error::AlgorithmViolation(format!("negative multiplicity reducing N={} λ={l}", self.n))
                })?;
            }
            let expected = hyperangular_dimension(self.n, l)?;
            if BigUint::from(red.dimension()) != expected {
                return Err(Error::AlgorithmViolation(format!(
                    "λ={l} reduction has dimension {} but ε = {expected}",
                    red.dimension()
                )));
            }
            self.rows.push(red);
        }
        Ok(())
    }

    /// Multiplicity of `[1^N]`: the number of independent fermionic seeds
    /// at this `λ`.
    pub fn seed_count(&mut self, lambda: u32) -> Result<u64> {
        let n = self.n;
        let row = self.get(lambda)?;
        debug_assert_eq!(row.labels().last(), Some(&Partition::column(n)));
        Ok(row.counts()[row.counts().len() - 1])
    }
}

pub fn lambda_reduction(n: usize, lambda: u32) -> Result<MultiplicityVector> {
    let mut cache = LambdaReductions::new(n)?;
    cache.get(lambda).cloned()
}

/// All labels with `X ≤ x_max`, ordered by energy, then `λ`, then `ν_ρ`.
pub fn labels_up_to(x_max: u64) -> Vec<HypercylindricalLabel> {
    let mut out = Vec::new();
    for x in 0..=x_max {
        for lambda in 0..=x {
            let rest = x - lambda;
            for nu_rho in 0..=rest / 2 {
                let nu_r = rest - 2 * nu_rho;
                out.push(HypercylindricalLabel::new(nu_r as u32, nu_rho as u32, lambda as u32));
            }
        }
    }
    out
}

/// Every `g = 0` level up to `X ≤ e_max`, each with its λ reduction.
pub fn enumerate_levels_g0(n: usize, e_max: u64) -> Result<Vec<(HypercylindricalLabel, MultiplicityVector)>> {
    let mut cache = LambdaReductions::new(n)?;
    labels_up_to(e_max).into_iter().map(|label| Ok((label, cache.get(label.lambda)?.clone()))).collect()
}
