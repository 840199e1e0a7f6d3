//! The hard-core (`g → ∞`) limit: the snippet representation on ordering
//! sectors.
//!
//! Configuration space splits into `N!` sectors, one per ordering
//! `x_{p₁} > x_{p₂} > … > x_{p_N}`. Restricting the fermionic seed
//! `|ν_R, ν_ρ, λ; [1^N]⟩` to each sector (and multiplying by the sign of
//! the ordering) gives `N!` degenerate states. A permutation relabels the
//! sector; parity inversion reverses it and contributes `(-1)^λ` times the
//! sign of the reversal. Characters of this representation are computed
//! by counting, and explicit bases are produced by exact projection.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::branching::{restriction_multiplicity, YoungSubgroupIrrep};
use crate::character::{character, character_table_snz2, class_labels, reduce_class_function, ClassFunction, Group};
use crate::error::{invalid, Error, Result};
use crate::numeric::{gcd_i128, small_factorial};
use crate::oscillator::{labels_up_to, HypercylindricalLabel, LambdaReductions, MultiplicityVector};
use crate::parity::Parity;
use crate::partition::{partitions_of, standard_tableaux, Partition};
use crate::perm::{all_permutations, Permutation};
use crate::MAX_TABLE_PARTICLES;

/// Largest particle number for explicit sector bases (`6! = 720` sectors).
pub const MAX_BASIS_PARTICLES: usize = 6;

/// An ordering sector; `ordering.apply(k)` is the particle in position `k`
/// counted from the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sector {
    pub ordering: Permutation,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ordering.ordering_label())
    }
}

/// `(-1)^λ · sgn(w₀)`: the factor parity inversion puts on every sector.
pub fn inversion_sign(n: usize, lambda_parity: Parity) -> i64 {
    lambda_parity.sign() * Permutation::reversal(n).sign()
}

/// Character of the sector representation on `S_N × Z₂`, in
/// [`class_labels`] order.
///
/// Pure permutations fix no sector except through the identity. The
/// element `i·c` maps sector `p` to `c∘p∘w₀`, so its trace counts the
/// orderings with `c∘p∘w₀ = p`. Those exist only when `c` is conjugate to
/// `w₀`, and then there are as many as the centralizer of `w₀` has elements.
pub fn sector_rep_characters(n: usize, lambda_parity: Parity) -> Result<ClassFunction> {
    if !(2..=MAX_TABLE_PARTICLES).contains(&n) {
        return Err(invalid(format!("sector characters need 2 ≤ N ≤ {MAX_TABLE_PARTICLES}, got {n}")));
    }
    let w0 = Permutation::reversal(n).cycle_type();
    let sign = inversion_sign(n, lambda_parity);
    let values = class_labels(n, Group::SymmetricParity)?
        .iter()
        .map(|c| match (c.inverted, c.cycle_type.partition().len() == n) {
            (false, true) => small_factorial(n) as i64,
            (false, false) => 0,
            (true, _) if c.cycle_type == w0 => sign * w0.centralizer_order() as i64,
            (true, _) => 0,
        })
        .collect();
    Ok(ClassFunction::new(n, Group::SymmetricParity, values))
}

/// Multiplicities of every `[p]^π` in the snippet representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnippetReduction {
    pub plus: MultiplicityVector,
    pub minus: MultiplicityVector,
}

impl SnippetReduction {
    pub fn n(&self) -> usize {
        self.plus.n()
    }

    pub fn for_parity(&self, pi: Parity) -> &MultiplicityVector {
        match pi {
            Parity::Plus => &self.plus,
            Parity::Minus => &self.minus,
        }
    }

    pub fn get(&self, p: &Partition, pi: Parity) -> u64 {
        self.for_parity(pi).get(p)
    }

    /// All counts in character-table irrep order (`+` block, then `−`).
    pub fn counts(&self) -> Vec<u64> {
        self.plus.counts().iter().chain(self.minus.counts()).copied().collect()
    }

    pub fn dimension(&self) -> u64 {
        self.plus.dimension() + self.minus.dimension()
    }

    pub fn scaled(&self, k: u64) -> SnippetReduction {
        SnippetReduction { plus: self.plus.scaled(k), minus: self.minus.scaled(k) }
    }
}

pub fn snippet_reduction(n: usize, lambda_parity: Parity) -> Result<SnippetReduction> {
    let chi = sector_rep_characters(n, lambda_parity)?;
    let table = character_table_snz2(n)?;
    let counts = reduce_class_function(&chi, &table)?;
    let half = counts.len() / 2;
    Ok(SnippetReduction {
        plus: MultiplicityVector::from_counts(n, counts[..half].to_vec())?,
        minus: MultiplicityVector::from_counts(n, counts[half..].to_vec())?,
    })
}

/// A vector over sectors with primitive integer amplitudes. The unit
/// vector is `amplitudes / √norm_sq`. Amplitudes are arbitrary precision:
/// orthogonal integer bases of large isotypic spaces outgrow 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SectorVector {
    amplitudes: Vec<BigInt>,
    norm_sq: BigInt,
}

impl SectorVector {
    fn from_big(amplitudes: Vec<BigInt>) -> Self {
        let norm_sq = dot_big(&amplitudes, &amplitudes);
        SectorVector { amplitudes, norm_sq }
    }

    /// Amplitudes indexed by sector in lexicographic ordering order.
    pub fn amplitudes(&self) -> &[BigInt] {
        &self.amplitudes
    }

    /// The amplitudes as `i64`, if they all fit.
    pub fn small_amplitudes(&self) -> Option<Vec<i64>> {
        self.amplitudes.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn norm_sq(&self) -> &BigInt {
        &self.norm_sq
    }

    pub fn dot(&self, other: &SectorVector) -> BigInt {
        dot_big(&self.amplitudes, &other.amplitudes)
    }

    pub fn amplitude(&self, ordering: &Permutation) -> &BigInt {
        &self.amplitudes[ordering.lex_rank()]
    }

    pub fn support(&self) -> usize {
        self.amplitudes.iter().filter(|a| !a.is_zero()).count()
    }
}

/// Whether `v` lies in the span of the mutually orthogonal `basis`, by
/// comparing `|v|²` with the squared length of its projection.
pub fn in_orthogonal_span(basis: &[SectorVector], v: &[BigInt]) -> bool {
    // Σ_b (v·b)² / |b|² accumulated as an exact fraction num/den
    let (mut num, mut den) = (BigInt::zero(), BigInt::one());
    for b in basis {
        let c = dot_big(v, &b.amplitudes);
        if c.is_zero() {
            continue;
        }
        num = num * &b.norm_sq + &c * &c * &den;
        den *= &b.norm_sq;
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
    }
    num == dot_big(v, v) * den
}

/// `[p]^π`, copy `τ` (0-based), Gelfand–Tsetlin component `j` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SnippetIrrepLabel {
    pub p: Partition,
    pub pi: Parity,
    pub tau: usize,
    pub j: usize,
}

impl fmt::Display for SnippetIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} tau={} j={}", self.p, self.pi, self.tau, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub label: SnippetIrrepLabel,
    pub vector: SectorVector,
}

/// The `N!` sectors with the action of `S_N × Z₂` precomputed as index
/// tables.
#[derive(Clone, Debug)]
pub struct SectorSpace {
    n: usize,
    sectors: Vec<Permutation>,
    reversed: Vec<usize>,
    // swaps[a][b][s]: index of (a b)∘s, for a < b
    swaps: Vec<Vec<Vec<usize>>>,
}

impl SectorSpace {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_BASIS_PARTICLES).contains(&n) {
            return Err(Error::GuardExceeded(format!(
                "explicit sector vectors need 2 ≤ N ≤ {MAX_BASIS_PARTICLES}, got {n}"
            )));
        }
        let sectors = all_permutations(n);
        let reversed = sectors.iter().map(|p| p.reversed().lex_rank()).collect();
        let swaps = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if a >= b {
                            return Vec::new();
                        }
                        let t = Permutation::transposition(n, a, b);
                        sectors.iter().map(|p| t.compose(p).lex_rank()).collect()
                    })
                    .collect()
            })
            .collect();
        Ok(SectorSpace { n, sectors, reversed, swaps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.sectors.len()
    }

    pub fn sectors(&self) -> &[Permutation] {
        &self.sectors
    }

    pub fn unit(&self, s: usize) -> Vec<i128> {
        let mut v = vec![0; self.dim()];
        v[s] = 1;
        v
    }

    /// `Û(g) v`, with `Û(g)|p⟩ = |g∘p⟩`.
    pub fn act(&self, g: &Permutation, v: &[i128]) -> Vec<i128> {
        let mut out = vec![0; v.len()];
        for (s, &x) in v.iter().enumerate() {
            if x != 0 {
                out[g.compose(&self.sectors[s]).lex_rank()] += x;
            }
        }
        out
    }

    /// `Û_Π v`, with `Û_Π|p⟩ = (-1)^λ sgn(w₀) |p∘w₀⟩`.
    pub fn invert(&self, v: &[i128], lambda_parity: Parity) -> Vec<i128> {
        let sign = inversion_sign(self.n, lambda_parity) as i128;
        let mut out = vec![0; v.len()];
        for (s, &x) in v.iter().enumerate() {
            out[self.reversed[s]] = sign * x;
        }
        out
    }

    fn swap(&self, a: usize, b: usize, v: &[i128]) -> Vec<i128> {
        let table = &self.swaps[a.min(b)][a.max(b)];
        let mut out = vec![0; v.len()];
        for (s, &x) in v.iter().enumerate() {
            out[table[s]] = x;
        }
        out
    }

    /// Jucys–Murphy element `X_k = Σ_{i<k} (i k)` applied to `v`.
    fn jucys_murphy(&self, k: usize, v: &[i128]) -> Vec<i128> {
        let mut out = vec![0; v.len()];
        for i in 0..k {
            for (o, x) in out.iter_mut().zip(self.swap(i, k, v)) {
                *o += x;
            }
        }
        out
    }
}

fn primitive(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd_i128(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Fraction-free Gram–Schmidt over primitive integer vectors. Intermediate
/// rows grow quickly, so the arithmetic is arbitrary precision.
#[derive(Clone, Debug, Default)]
struct Orthogonal {
    vecs: Vec<Vec<BigInt>>,
    norms: Vec<BigInt>,
}

fn primitive_big(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::one() {
        v.iter_mut().for_each(|x| *x /= &g);
    }
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
}

fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Orthogonal {
    /// Component of `w` orthogonal to the span, scaled to primitive
    /// integers; `None` if it vanishes.
    fn residual(&self, w: Vec<i128>) -> Option<Vec<BigInt>> {
        let mut w: Vec<BigInt> = w.into_iter().map(BigInt::from).collect();
        for (b, nb) in self.vecs.iter().zip(&self.norms) {
            let c = dot_big(&w, b);
            if !c.is_zero() {
                let g = c.gcd(nb);
                let (c, nb) = (&c / &g, nb / &g);
                w.iter_mut().zip(b).for_each(|(x, y)| *x = &*x * &nb - &c * y);
                primitive_big(&mut w);
            }
        }
        if w.iter().all(Zero::is_zero) {
            return None;
        }
        primitive_big(&mut w);
        Some(w)
    }

    fn push(&mut self, v: Vec<BigInt>) {
        self.norms.push(dot_big(&v, &v));
        self.vecs.push(v);
    }

    fn len(&self) -> usize {
        self.vecs.len()
    }

    fn into_vectors(self) -> Vec<SectorVector> {
        self.vecs.into_iter().map(SectorVector::from_big).collect()
    }
}

/// Eigenvalues of `X_k` that occur for some standard tableau of size `n`.
fn content_sets(n: usize) -> Result<Vec<Vec<i64>>> {
    let mut sets: Vec<Vec<i64>> = vec![Vec::new(); n];
    for p in partitions_of(n)? {
        for t in standard_tableaux(&p) {
            for (k, c) in t.contents().into_iter().enumerate() {
                if !sets[k].contains(&c) {
                    sets[k].push(c);
                }
            }
        }
    }
    sets.iter_mut().for_each(|s| s.sort_unstable());
    Ok(sets)
}

/// Unnormalized Young projector `E_T = Π_k Π_{c ≠ c_T(k)} (X_k − c)`,
/// which acts as `κ_T` times the orthogonal projector onto the `T`-th
/// Gelfand–Tsetlin line of every copy of `[shape T]`.
struct YoungProjector<'a> {
    space: &'a SectorSpace,
    sets: Vec<Vec<i64>>,
}

impl<'a> YoungProjector<'a> {
    fn new(space: &'a SectorSpace) -> Result<Self> {
        Ok(YoungProjector { space, sets: content_sets(space.n)? })
    }

    fn apply(&self, contents: &[i64], v: &[i128]) -> Vec<i128> {
        let mut w = v.to_vec();
        for (k, (set, &target)) in self.sets.iter().zip(contents).enumerate().take(self.space.n).skip(1) {
            for &c in set {
                if c == target {
                    continue;
                }
                let xw = self.space.jucys_murphy(k, &w);
                w.iter_mut().zip(xw).for_each(|(a, b)| *a = b - c as i128 * *a);
                if w.iter().all(|&x| x == 0) {
                    return w;
                }
                primitive(&mut w);
            }
        }
        w
    }
}

fn parity_project(space: &SectorSpace, v: &[i128], lambda_parity: Parity, pi: Parity) -> Vec<i128> {
    let iv = space.invert(v, lambda_parity);
    v.iter().zip(iv).map(|(a, b)| a + pi.sign() as i128 * b).collect()
}

/// Orthogonal basis of the `[p]^π` component of the sector space, resolved
/// into Gelfand–Tsetlin components `j` (standard tableaux of `p` in order)
/// and copies `τ`. Copies are found by scanning unit sectors in
/// lexicographic order. Zero multiplicity yields an empty list.
pub fn snippet_projection_basis(
    n: usize,
    lambda_parity: Parity,
    p: &Partition,
    pi: Parity,
) -> Result<Vec<BasisVector>> {
    let space = SectorSpace::new(n)?;
    projection_basis_in(&space, lambda_parity, p, pi)
}

pub fn projection_basis_in(
    space: &SectorSpace,
    lambda_parity: Parity,
    p: &Partition,
    pi: Parity,
) -> Result<Vec<BasisVector>> {
    let n = space.n;
    if p.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: p.n() });
    }
    let mult = snippet_reduction(n, lambda_parity)?.get(p, pi) as usize;
    let mut out = Vec::new();
    if mult == 0 {
        return Ok(out);
    }
    let proj = YoungProjector::new(space)?;
    for (j, tableau) in standard_tableaux(p).iter().enumerate() {
        let contents = tableau.contents();
        let mut found = Orthogonal::default();
        for s in 0..space.dim() {
            let w = proj.apply(&contents, &space.unit(s));
            let w = parity_project(space, &w, lambda_parity, pi);
            if let Some(r) = found.residual(w) {
                found.push(r);
                if found.len() == mult {
                    break;
                }
            }
        }
        if found.len() != mult {
            return Err(Error::AlgorithmViolation(format!(
                "found {} of {mult} copies of {p}{pi} for tableau {}",
                found.len(),
                j + 1
            )));
        }
        for (tau, vector) in found.into_vectors().into_iter().enumerate() {
            out.push(BasisVector { label: SnippetIrrepLabel { p: p.clone(), pi, tau, j: j + 1 }, vector });
        }
    }
    Ok(out)
}

/// Elements of the Young subgroup for `blocks` (consecutive particles),
/// each with the product character of `factors`.
fn young_subgroup_elements(factors: &[Partition]) -> Vec<(Permutation, i64)> {
    let n: usize = factors.iter().map(Partition::n).sum();
    let mut acc: Vec<(Vec<usize>, i64)> = vec![((0..n).collect(), 1)];
    let mut offset = 0;
    for q in factors {
        let b = q.n();
        let mut next = Vec::new();
        for local in all_permutations(b) {
            let chi = character(q, &local.cycle_type());
            if chi == 0 {
                continue;
            }
            for (images, c) in &acc {
                let mut im = images.clone();
                for i in 0..b {
                    im[offset + i] = offset + local.apply(i);
                }
                next.push((im, c * chi));
            }
        }
        acc = next;
        offset += b;
    }
    acc.into_iter().map(|(im, c)| (Permutation::from_images(im).expect("block permutation"), c)).collect()
}

/// Orthogonal basis of the part of `[p]^π` that transforms as `tag` under
/// the Young subgroup of consecutive particle blocks. Vectors come from
/// projecting unit sectors in lexicographic order.
pub fn snippet_component_basis(
    n: usize,
    lambda_parity: Parity,
    p: &Partition,
    pi: Parity,
    tag: &YoungSubgroupIrrep,
) -> Result<Vec<SectorVector>> {
    let space = SectorSpace::new(n)?;
    component_basis_in(&space, lambda_parity, p, pi, tag)
}

pub fn component_basis_in(
    space: &SectorSpace,
    lambda_parity: Parity,
    p: &Partition,
    pi: Parity,
    tag: &YoungSubgroupIrrep,
) -> Result<Vec<SectorVector>> {
    let n = space.n;
    if p.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: p.n() });
    }
    let mult = snippet_reduction(n, lambda_parity)?.get(p, pi);
    let factors = tag.padded(n)?;
    let target = (mult * restriction_multiplicity(p, tag)? * tag.dimension()) as usize;
    let mut found = Orthogonal::default();
    if target == 0 {
        return Ok(Vec::new());
    }
    let subgroup = young_subgroup_elements(&factors);
    // isotypic projector of [p], up to the factor Δ/N!
    let group: Vec<(Permutation, i128)> = space
        .sectors
        .iter()
        .filter_map(|g| {
            let chi = character(p, &g.cycle_type());
            (chi != 0).then(|| (g.clone(), chi as i128))
        })
        .collect();
    for s in 0..space.dim() {
        let mut h = vec![0i128; space.dim()];
        for (g, chi) in &subgroup {
            h[g.compose(&space.sectors[s]).lex_rank()] += *chi as i128;
        }
        if h.iter().all(|&x| x == 0) {
            continue;
        }
        let mut iso = vec![0i128; space.dim()];
        for (t, &x) in h.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (g, chi) in &group {
                iso[g.compose(&space.sectors[t]).lex_rank()] += chi * x;
            }
        }
        let w = parity_project(space, &iso, lambda_parity, pi);
        if let Some(r) = found.residual(w) {
            found.push(r);
            if found.len() == target {
                break;
            }
        }
    }
    if found.len() != target {
        return Err(Error::AlgorithmViolation(format!(
            "found {} of {target} vectors of {p}{pi} tagged {tag}",
            found.len()
        )));
    }
    Ok(found.into_vectors())
}

/// A `g → ∞` level: one seed-built snippet space per copy of `[1^N]` at
/// this `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GInfLevel {
    pub label: HypercylindricalLabel,
    pub seed_count: u64,
    pub reduction: SnippetReduction,
}

/// Snippet reductions for both `λ` parities of one `N`.
#[derive(Clone, Debug)]
pub struct SnippetTables {
    even: SnippetReduction,
    odd: SnippetReduction,
}

impl SnippetTables {
    pub fn new(n: usize) -> Result<Self> {
        Ok(SnippetTables { even: snippet_reduction(n, Parity::Plus)?, odd: snippet_reduction(n, Parity::Minus)? })
    }

    pub fn for_lambda(&self, lambda: u32) -> &SnippetReduction {
        match Parity::from_exponent(lambda as u64) {
            Parity::Plus => &self.even,
            Parity::Minus => &self.odd,
        }
    }
}

/// Every `g → ∞` level with `X ≤ e_max`, ordered like the `g = 0` levels.
pub fn enumerate_levels_ginf(n: usize, e_max: u64) -> Result<Vec<GInfLevel>> {
    let mut lambdas = LambdaReductions::new(n)?;
    let tables = SnippetTables::new(n)?;
    let mut out = Vec::new();
    for label in labels_up_to(e_max) {
        let seed_count = lambdas.seed_count(label.lambda)?;
        if seed_count > 0 {
            out.push(GInfLevel { label, seed_count, reduction: tables.for_lambda(label.lambda).scaled(seed_count) });
        }
    }
    Ok(out)
}
