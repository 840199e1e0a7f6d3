//! Level bookkeeping by the conserved triple `μ = {ν_R, π, [p]}` and the
//! adiabatic map between the non-interacting and hard-core limits.
//!
//! Levels carrying the same `μ` are assumed not to cross as `g` grows, so
//! the `k`-th state of `μ` at `g = 0` connects to the `k`-th state of `μ` at
//! `g → ∞`. This rests on `S_N × Z₂ × U(1)` exhausting the symmetries at
//! intermediate `g`, which is assumed rather than proven.
//!
//! Levels of equal energy within one `μ` are ordered by `λ`, then `ν_ρ`.
//! That order is a convention; results that depend on it are flagged.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::branching::{branch_multiplicity, restriction_multiplicity, ComponentPattern, YoungSubgroupIrrep};
use crate::error::{invalid, Error, Result};
use crate::oscillator::{labels_up_to, Energy, HypercylindricalLabel, LambdaReductions};
use crate::parity::Parity;
use crate::partition::{partitions_of, Partition};
use crate::snippet::SnippetTables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Non-interacting, `g = 0`.
    Free,
    /// Hard-core, `g → ∞`.
    HardCore,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Free => "g=0",
            Regime::HardCore => "g=inf",
        })
    }
}

impl core::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "0" | "g=0" | "zero" | "free" => Ok(Regime::Free),
            "inf" | "g=inf" | "infinite" | "infinity" | "hard-core" | "hardcore" => Ok(Regime::HardCore),
            _ => Err(invalid(format!("unknown regime `{s}`"))),
        }
    }
}

/// The conserved irrep triple `{ν_R, π, [p]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GNLabel {
    pub nu_r: u32,
    pub pi: Parity,
    pub p: Partition,
}

impl GNLabel {
    /// Total parity `Π = π (-1)^{ν_R}`.
    pub fn total_parity(&self) -> Parity {
        self.pi * Parity::from_exponent(self.nu_r as u64)
    }
}

impl fmt::Display for GNLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.nu_r, self.pi, self.p)
    }
}

/// `|ν_R, ν_ρ, λ; [p]^π, τ; tag⟩` in one of the two limits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateLabel {
    pub hyper: HypercylindricalLabel,
    pub p: Partition,
    pub pi: Parity,
    pub tau: u64,
    pub component_tag: Option<YoungSubgroupIrrep>,
    pub regime: Regime,
}

impl StateLabel {
    /// A `g = 0` state; its relative parity is `(-1)^λ`.
    pub fn free(
        hyper: HypercylindricalLabel,
        p: Partition,
        tau: u64,
        component_tag: Option<YoungSubgroupIrrep>,
    ) -> Self {
        let pi = hyper.relative_parity();
        StateLabel { hyper, p, pi, tau, component_tag, regime: Regime::Free }
    }

    pub fn gn_label(&self) -> GNLabel {
        GNLabel { nu_r: self.hyper.nu_r, pi: self.pi, p: self.p.clone() }
    }

    pub fn energy(&self) -> Energy {
        self.hyper.energy(self.p.n())
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}{}", self.hyper, self.p, self.pi)?;
        if self.tau > 0 {
            write!(f, " tau={}", self.tau)?;
        }
        if let Some(tag) = &self.component_tag {
            write!(f, " {tag}")?;
        }
        Ok(())
    }
}

/// Parses `ν_R,ν_ρ,λ,p`, e.g. `0,0,1,21` or `0,0,2,2^2`.
pub fn parse_state(text: &str) -> Result<(HypercylindricalLabel, Partition)> {
    let fields: Vec<&str> = text.splitn(4, ',').map(str::trim).collect();
    if fields.len() != 4 {
        return Err(invalid(format!("state `{text}` must look like nu_R,nu_rho,lambda,partition")));
    }
    let num = |s: &str| s.parse::<u32>().map_err(|_| invalid(format!("bad quantum number `{s}` in `{text}`")));
    let hyper = HypercylindricalLabel::new(num(fields[0])?, num(fields[1])?, num(fields[2])?);
    Ok((hyper, fields[3].parse()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub energy: Energy,
    pub label: HypercylindricalLabel,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapResult {
    pub source: StateLabel,
    /// Zero-based position of the source among all `g = 0` states of `μ`.
    pub rank: u64,
    pub target: HypercylindricalLabel,
    pub target_p: Partition,
    pub target_pi: Parity,
    /// Multiplicity of `μ` at the target level.
    pub target_dimension: u64,
    pub resolved: bool,
    /// True when an equal-energy tie inside `μ` was broken by convention.
    pub convention_ordered: bool,
}

impl MapResult {
    /// `0,0,3 [21]- dim=1 resolved`.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {}{} dim={} {}",
            self.target,
            self.target_p,
            self.target_pi,
            self.target_dimension,
            if self.resolved { "resolved" } else { "unresolved" }
        );
        if self.convention_ordered {
            s.push_str(" convention-ordered");
        }
        s
    }
}

/// Memoized reductions for one particle number.
#[derive(Clone, Debug)]
pub struct Spectroscopy {
    n: usize,
    lambdas: LambdaReductions,
    snippets: Option<SnippetTables>,
}

impl Spectroscopy {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Spectroscopy { n, lambdas: LambdaReductions::new(n)?, snippets: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_partition(&self, p: &Partition) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: p.n() });
        }
        Ok(())
    }

    fn snippets(&mut self) -> Result<&SnippetTables> {
        if self.snippets.is_none() {
            self.snippets = Some(SnippetTables::new(self.n)?);
        }
        Ok(self.snippets.as_ref().expect("just built"))
    }

    /// Copies of `[p]^π` at this label; zero if the label does not carry it.
    pub fn multiplicity(
        &mut self,
        regime: Regime,
        label: &HypercylindricalLabel,
        p: &Partition,
        pi: Parity,
    ) -> Result<u64> {
        self.check_partition(p)?;
        match regime {
            Regime::Free => {
                if pi != label.relative_parity() {
                    return Ok(0);
                }
                Ok(self.lambdas.get(label.lambda)?.get(p))
            }
            Regime::HardCore => {
                let seeds = self.lambdas.seed_count(label.lambda)?;
                if seeds == 0 {
                    return Ok(0);
                }
                Ok(seeds * self.snippets()?.for_lambda(label.lambda).get(p, pi))
            }
        }
    }

    /// Levels carrying `μ` with `X ≤ x_max`, in energy order with the
    /// `λ`, `ν_ρ` tie-break.
    pub fn spectrum(&mut self, regime: Regime, mu: &GNLabel, x_max: u64) -> Result<Vec<SpectrumEntry>> {
        self.check_partition(&mu.p)?;
        let mut out = Vec::new();
        for label in labels_up_to(x_max) {
            if label.nu_r != mu.nu_r {
                continue;
            }
            let multiplicity = self.multiplicity(regime, &label, &mu.p, mu.pi)?;
            if multiplicity > 0 {
                out.push(SpectrumEntry { energy: label.energy(self.n), label, multiplicity });
            }
        }
        Ok(out)
    }

    /// Default search ceiling for images: `4N` quanta above the source.
    pub fn default_ceiling(&self, source_x: u64) -> u64 {
        source_x + 4 * self.n as u64
    }

    /// Follows `source` from `g = 0` to `g → ∞` by rank within its `μ`,
    /// looking no higher than `ceiling` quanta (default: [`Self::default_ceiling`]).
    pub fn adiabatic_map(&mut self, source: &StateLabel, ceiling: Option<u64>) -> Result<MapResult> {
        if source.regime != Regime::Free {
            return Err(invalid("adiabatic maps start from a g=0 state"));
        }
        let mu = source.gn_label();
        let x = source.hyper.excitation();
        let here = self.multiplicity(Regime::Free, &source.hyper, &source.p, source.pi)?;
        if here == 0 {
            return Err(invalid(format!("{} does not carry {}{}", source.hyper, source.p, source.pi)));
        }
        if source.tau >= here {
            return Err(invalid(format!("copy index {} out of range; {} carries {here}", source.tau, source.hyper)));
        }
        if let Some(tag) = &source.component_tag {
            if restriction_multiplicity(&source.p, tag)? == 0 {
                return Err(invalid(format!("{} contains no {tag}", source.p)));
            }
        }
        let free = self.spectrum(Regime::Free, &mu, x)?;
        let mut rank = source.tau;
        for e in &free {
            if e.label == source.hyper {
                break;
            }
            rank += e.multiplicity;
        }
        let source_tied = free.iter().filter(|e| e.energy == source.energy()).count() > 1;

        let ceiling = ceiling.unwrap_or_else(|| self.default_ceiling(x));
        let hard = self.spectrum(Regime::HardCore, &mu, ceiling)?;
        let mut before = 0;
        for e in &hard {
            if rank < before + e.multiplicity {
                let target_tied = hard.iter().filter(|o| o.energy == e.energy).count() > 1;
                return Ok(MapResult {
                    source: source.clone(),
                    rank,
                    target: e.label,
                    target_p: mu.p.clone(),
                    target_pi: mu.pi,
                    target_dimension: e.multiplicity,
                    resolved: e.multiplicity == 1,
                    convention_ordered: source_tied || target_tied,
                });
            }
            before += e.multiplicity;
        }
        Err(Error::SearchExhausted { ceiling_twice: 2 * ceiling + self.n as u64, rank, found: before })
    }

    /// Lowest-energy states compatible with `pattern`, every copy and tie
    /// included. Searches up to `ceiling` quanta (default: the lowest
    /// fermionic level plus `4N`).
    pub fn ground_state(
        &mut self,
        pattern: &ComponentPattern,
        regime: Regime,
        ceiling: Option<u64>,
    ) -> Result<Vec<StateLabel>> {
        if pattern.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: pattern.n() });
        }
        let n = self.n as u64;
        let ceiling = ceiling.unwrap_or(n * (n - 1) / 2 + 4 * n);
        let tag = component_tag(pattern);
        let shapes: Vec<Partition> = partitions_of(self.n)?
            .into_iter()
            .filter(|p| branch_multiplicity(p, pattern).is_ok_and(|m| m > 0))
            .collect();
        let parities: &[Parity] = match regime {
            Regime::Free => &[Parity::Plus],
            Regime::HardCore => &[Parity::Plus, Parity::Minus],
        };
        let mut found = Vec::new();
        let mut current_x = None;
        for label in labels_up_to(ceiling) {
            if current_x.is_some_and(|cx| label.excitation() > cx) {
                break;
            }
            for p in &shapes {
                for &pi in parities {
                    let pi = if regime == Regime::Free { label.relative_parity() } else { pi };
                    let m = self.multiplicity(regime, &label, p, pi)?;
                    for tau in 0..m {
                        current_x = Some(label.excitation());
                        found.push(StateLabel {
                            hyper: label,
                            p: p.clone(),
                            pi,
                            tau,
                            component_tag: tag.clone(),
                            regime,
                        });
                    }
                }
            }
        }
        if found.is_empty() {
            return Err(Error::SearchExhausted { ceiling_twice: 2 * ceiling + n, rank: 0, found: 0 });
        }
        Ok(found)
    }
}

/// The subgroup irrep a multi-component pattern pins down; `None` for one
/// component or for distinguishable particles.
pub fn component_tag(pattern: &ComponentPattern) -> Option<YoungSubgroupIrrep> {
    if pattern.components() < 2 || pattern.is_distinguishable() {
        return None;
    }
    Some(pattern.subgroup_irrep())
}

pub fn spectrum_by_irrep(n: usize, regime: Regime, mu: &GNLabel, x_max: u64) -> Result<Vec<SpectrumEntry>> {
    Spectroscopy::new(n)?.spectrum(regime, mu, x_max)
}

pub fn adiabatic_map(n: usize, source: &StateLabel) -> Result<MapResult> {
    Spectroscopy::new(n)?.adiabatic_map(source, None)
}

pub fn ground_state(n: usize, pattern: &ComponentPattern, regime: Regime) -> Result<Vec<StateLabel>> {
    Spectroscopy::new(n)?.ground_state(pattern, regime, None)
}
