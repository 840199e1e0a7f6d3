//! Brute-force representations for cross-checking the production paths.
//!
//! Everything here materializes group elements and basis states directly:
//! the shell representation permutes the coordinates of excitation tuples,
//! and the sector representation relabels and reverses orderings with the
//! parity sign worked out per sector. Nothing is shared with the Kostka or
//! counting code paths except the character tables used for the final
//! inner products.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::character::{
    character_table_sn, character_table_snz2, class_labels, reduce_class_function, ClassFunction, ClassLabel, Group,
};
use crate::error::{Error, Result};
use crate::numeric::gcd_i128;
use crate::oscillator::MultiplicityVector;
use crate::parity::Parity;
use crate::partition::CycleType;
use crate::perm::{all_permutations, Permutation};
use crate::snippet::SnippetReduction;

/// Largest `N` for the explicit shell representation.
pub const MAX_SHELL_PARTICLES: usize = 5;
/// Largest excitation for the explicit shell representation.
pub const MAX_SHELL_EXCITATION: u64 = 8;
/// Largest `N` for the explicit sector representation.
pub const MAX_SECTOR_PARTICLES: usize = 6;

/// A matrix with one `±1` per column: column `j` goes to row `rows[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    rows: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        SignedPermutation { rows: (0..dim).collect(), signs: vec![1; dim] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, col: usize) -> (usize, i8) {
        (self.rows[col], self.signs[col])
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let (rows, signs) = (0..other.dim())
            .map(|j| {
                let (mid, s1) = other.entry(j);
                let (row, s2) = self.entry(mid);
                (row, s1 * s2)
            })
            .unzip();
        SignedPermutation { rows, signs }
    }

    pub fn trace(&self) -> i64 {
        self.rows.iter().enumerate().filter(|&(j, &r)| j == r).map(|(j, _)| self.signs[j] as i64).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(j, &r)| j == r) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn apply(&self, v: &[i128]) -> Vec<i128> {
        let mut out = vec![0; v.len()];
        for (j, &x) in v.iter().enumerate() {
            out[self.rows[j]] += self.signs[j] as i128 * x;
        }
        out
    }
}

/// An element of `S_N` or, with `inverted`, of the coset `i·S_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub perm: Permutation,
    pub inverted: bool,
}

impl GroupElement {
    pub fn permutation(perm: Permutation) -> Self {
        GroupElement { perm, inverted: false }
    }

    pub fn inversion(n: usize) -> Self {
        GroupElement { perm: Permutation::identity(n), inverted: true }
    }

    /// Product `self · other`; inversion commutes with permutations.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement { perm: self.perm.compose(&other.perm), inverted: self.inverted != other.inverted }
    }

    /// A representative of a conjugacy class: cycles on consecutive labels.
    pub fn representative(class: &ClassLabel) -> Self {
        let n = class.cycle_type.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in class.cycle_type.partition().parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        GroupElement { perm: Permutation::from_images(images).expect("cycles"), inverted: class.inverted }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Tuples `(n₁, …, n_N)` of single-particle excitations summing to `X`.
    ShellArrangements { x: u64, tuples: Vec<Vec<u64>> },
    /// Ordering sectors, with the `λ` parity fixing the inversion sign.
    Sectors { lambda_parity: Parity, orderings: Vec<Permutation> },
}

#[derive(Clone, Debug)]
pub struct ExplicitRep {
    n: usize,
    group: Group,
    basis: Basis,
    /// Adjacent transpositions, then inversion for `S_N × Z₂`.
    generators: Vec<(GroupElement, SignedPermutation)>,
    traces: ClassFunction,
}

impl ExplicitRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        match &self.basis {
            Basis::ShellArrangements { tuples, .. } => tuples.len(),
            Basis::Sectors { orderings, .. } => orderings.len(),
        }
    }

    pub fn generators(&self) -> &[(GroupElement, SignedPermutation)] {
        &self.generators
    }

    /// Traces of class representatives.
    pub fn traces(&self) -> &ClassFunction {
        &self.traces
    }

    /// The matrix of `g`, built from the definition of the action.
    pub fn matrix(&self, g: &GroupElement) -> SignedPermutation {
        match &self.basis {
            Basis::ShellArrangements { tuples, .. } => {
                let rows = tuples
                    .iter()
                    .map(|t| {
                        let mut moved = vec![0; t.len()];
                        for (i, &e) in t.iter().enumerate() {
                            moved[g.perm.apply(i)] = e;
                        }
                        tuples.binary_search(&moved).expect("arrangement permuted into the shell")
                    })
                    .collect::<Vec<_>>();
                let dim = rows.len();
                SignedPermutation { rows, signs: vec![1; dim] }
            }
            Basis::Sectors { lambda_parity, orderings } => {
                let (rows, signs) = orderings
                    .iter()
                    .map(|p| {
                        let (q, s) = if g.inverted {
                            // Π|p⟩ = (-1)^λ sgn(p) sgn(p̃) |p̃⟩ with p̃ the reversed order
                            let rev = p.reversed();
                            let s = lambda_parity.sign() * p.sign() * rev.sign();
                            (rev, s)
                        } else {
                            (p.clone(), 1)
                        };
                        (g.perm.compose(&q).lex_rank(), s as i8)
                    })
                    .unzip();
                SignedPermutation { rows, signs }
            }
        }
    }

    /// Checks `U(a)U(b) = U(ab)` on every pair of generators and on the
    /// given words, and that every generator squares to the identity.
    pub fn check_homomorphism(&self, words: &[Vec<usize>]) -> Result<()> {
        let fail = |what: &str| Err(Error::AlgorithmViolation(format!("explicit representation: {what}")));
        for (g, m) in &self.generators {
            if !m.compose(m).is_identity() {
                return fail("a generator does not square to the identity");
            }
            if *m != self.matrix(g) {
                return fail("generator matrix disagrees with the action");
            }
        }
        for (a, ma) in &self.generators {
            for (b, mb) in &self.generators {
                if ma.compose(mb) != self.matrix(&a.compose(b)) {
                    return fail("product of generators is not represented by the product element");
                }
            }
        }
        for word in words {
            let mut element = GroupElement::permutation(Permutation::identity(self.n));
            let mut product = SignedPermutation::identity(self.dim());
            for &i in word {
                let (g, m) = &self.generators[i % self.generators.len()];
                element = element.compose(g);
                product = product.compose(m);
            }
            if product != self.matrix(&element) {
                return fail("a word in the generators is not represented by its product");
            }
        }
        Ok(())
    }
}

fn generators(n: usize, group: Group) -> Vec<GroupElement> {
    let mut gens: Vec<GroupElement> =
        (0..n - 1).map(|k| GroupElement::permutation(Permutation::transposition(n, k, k + 1))).collect();
    if group == Group::SymmetricParity {
        gens.push(GroupElement::inversion(n));
    }
    gens
}

fn build(n: usize, group: Group, basis: Basis) -> Result<ExplicitRep> {
    let mut rep =
        ExplicitRep { n, group, basis, generators: Vec::new(), traces: ClassFunction::new(n, group, Vec::new()) };
    rep.generators = generators(n, group).into_iter().map(|g| (g.clone(), rep.matrix(&g))).collect();
    let values = class_labels(n, group)?.iter().map(|c| rep.matrix(&GroupElement::representative(c)).trace()).collect();
    rep.traces = ClassFunction::new(n, group, values);
    Ok(rep)
}

fn compositions(n: usize, x: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![x]];
    }
    let mut out = Vec::new();
    for first in 0..=x {
        for mut rest in compositions(n - 1, x - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `S_N` acting on the excitation tuples of shell `X`, and its reduction.
pub fn explicit_shell_rep(n: usize, x: u64) -> Result<(ExplicitRep, MultiplicityVector)> {
    if !(2..=MAX_SHELL_PARTICLES).contains(&n) || x > MAX_SHELL_EXCITATION {
        return Err(Error::GuardExceeded(format!(
            "explicit shell representation needs 2 ≤ N ≤ {MAX_SHELL_PARTICLES} and X ≤ {MAX_SHELL_EXCITATION}"
        )));
    }
    let mut tuples = compositions(n, x);
    tuples.sort();
    let rep = build(n, Group::Symmetric, Basis::ShellArrangements { x, tuples })?;
    let counts = reduce_class_function(rep.traces(), &character_table_sn(n)?)?;
    Ok((rep, MultiplicityVector::from_counts(n, counts)?))
}

/// Sector representations for both `λ` parities.
#[derive(Clone, Debug)]
pub struct SectorOracle {
    pub even: ExplicitRep,
    pub odd: ExplicitRep,
    pub even_reduction: SnippetReduction,
    pub odd_reduction: SnippetReduction,
}

impl SectorOracle {
    pub fn rep(&self, lambda_parity: Parity) -> &ExplicitRep {
        match lambda_parity {
            Parity::Plus => &self.even,
            Parity::Minus => &self.odd,
        }
    }

    pub fn reduction(&self, lambda_parity: Parity) -> &SnippetReduction {
        match lambda_parity {
            Parity::Plus => &self.even_reduction,
            Parity::Minus => &self.odd_reduction,
        }
    }
}

pub fn explicit_sector_rep(n: usize) -> Result<SectorOracle> {
    if !(2..=MAX_SECTOR_PARTICLES).contains(&n) {
        return Err(Error::GuardExceeded(format!(
            "explicit sector representation needs 2 ≤ N ≤ {MAX_SECTOR_PARTICLES}"
        )));
    }
    let table = character_table_snz2(n)?;
    let one = |lambda_parity: Parity| -> Result<(ExplicitRep, SnippetReduction)> {
        let rep = build(n, Group::SymmetricParity, Basis::Sectors { lambda_parity, orderings: all_permutations(n) })?;
        let counts = reduce_class_function(rep.traces(), &table)?;
        let half = counts.len() / 2;
        let red = SnippetReduction {
            plus: MultiplicityVector::from_counts(n, counts[..half].to_vec())?,
            minus: MultiplicityVector::from_counts(n, counts[half..].to_vec())?,
        };
        Ok((rep, red))
    };
    let (even, even_reduction) = one(Parity::Plus)?;
    let (odd, odd_reduction) = one(Parity::Minus)?;
    Ok(SectorOracle { even, odd, even_reduction, odd_reduction })
}

/// All elements of the group the representation carries.
pub fn group_elements(n: usize, group: Group) -> Vec<GroupElement> {
    let perms = all_permutations(n);
    let mut out: Vec<GroupElement> = perms.iter().cloned().map(GroupElement::permutation).collect();
    if group == Group::SymmetricParity {
        out.extend(perms.into_iter().map(|perm| GroupElement { perm, inverted: true }));
    }
    out
}

/// Rank of the isotypic projector `Σ_g χ^μ(g) U(g)` for table irrep
/// `irrep`, computed by row reduction over all of its columns.
pub fn isotypic_rank(rep: &ExplicitRep, irrep: usize) -> Result<usize> {
    let table = match rep.group {
        Group::Symmetric => character_table_sn(rep.n)?,
        Group::SymmetricParity => character_table_snz2(rep.n)?,
    };
    let classes = table.classes().to_vec();
    let dim = rep.dim();
    let mut columns = vec![vec![0i128; dim]; dim];
    for g in group_elements(rep.n, rep.group) {
        let label = ClassLabel { cycle_type: CycleType(g.perm.cycle_type().0), inverted: g.inverted };
        let c = classes.iter().position(|k| *k == label).expect("class present");
        let chi = table.value(irrep, c) as i128;
        if chi == 0 {
            continue;
        }
        let m = rep.matrix(&g);
        for (j, col) in columns.iter_mut().enumerate() {
            let (r, s) = m.entry(j);
            col[r] += chi * s as i128;
        }
    }
    Ok(rank(columns))
}

/// Rank of a set of integer vectors by fraction-free elimination.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let p = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let g = gcd_i128(f, p[col]);
            let (a, b) = (p[col] / g, f / g);
            let mut h = 0;
            for (x, y) in row.iter_mut().zip(&p) {
                *x = *x * a - b * y;
                h = gcd_i128(h, *x);
            }
            if h > 1 {
                row.iter_mut().for_each(|x| *x /= h);
            }
        }
        r += 1;
    }
    r
}
