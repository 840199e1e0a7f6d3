//! Character tables of `S_N` and `S_N × Z₂`, reduction of class functions
//! into irreps, and Kostka numbers.
//!
//! Characters are generated with the Murnaghan–Nakayama rule on β-sets, so
//! every entry is an exact integer. Class functions live on conjugacy
//! classes only; individual group elements are never materialized here.
//!
//! Class order follows the printed tables: identity first (`[1^N]`, …,
//! `[N]`), and for `S_N × Z₂` the same list again prefixed by the inversion
//! `i`. Irreps are listed `[N]` first; for `S_N × Z₂` all `π = +` irreps
//! precede all `π = −` irreps.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::parity::Parity;
use crate::partition::{partitions_of, CycleType, Partition};
use crate::MAX_TABLE_PARTICLES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    /// `S_N`.
    Symmetric,
    /// `S_N × Z₂`, the second factor being parity inversion.
    SymmetricParity,
}

impl Group {
    pub fn order(self, n: usize) -> u64 {
        let f = crate::numeric::small_factorial(n);
        match self {
            Group::Symmetric => f,
            Group::SymmetricParity => 2 * f,
        }
    }
}

/// A conjugacy class; `inverted` marks the coset `i·c` of `S_N × Z₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub cycle_type: CycleType,
    pub inverted: bool,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            write!(f, "i{}", self.cycle_type)
        } else {
            write!(f, "{}", self.cycle_type)
        }
    }
}

/// An irrep `[p]` of `S_N`, or `[p]^π` of `S_N × Z₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub partition: Partition,
    pub parity: Option<Parity>,
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Some(p) => write!(f, "{}{}", self.partition, p),
            None => write!(f, "{}", self.partition),
        }
    }
}

/// Conjugacy classes of `group` in table order.
pub fn class_labels(n: usize, group: Group) -> Result<Vec<ClassLabel>> {
    let mut plain: Vec<ClassLabel> =
        partitions_of(n)?.into_iter().rev().map(|p| ClassLabel { cycle_type: CycleType(p), inverted: false }).collect();
    if group == Group::SymmetricParity {
        let inv: Vec<ClassLabel> =
            plain.iter().map(|c| ClassLabel { cycle_type: c.cycle_type.clone(), inverted: true }).collect();
        plain.extend(inv);
    }
    Ok(plain)
}

/// Irreps of `group` in table order.
pub fn irrep_labels(n: usize, group: Group) -> Result<Vec<IrrepLabel>> {
    let ps = partitions_of(n)?;
    Ok(match group {
        Group::Symmetric => ps.into_iter().map(|partition| IrrepLabel { partition, parity: None }).collect(),
        Group::SymmetricParity => [Parity::Plus, Parity::Minus]
            .into_iter()
            .flat_map(|pi| ps.iter().cloned().map(move |partition| IrrepLabel { partition, parity: Some(pi) }))
            .collect(),
    })
}

/// `χ^p(c)` by the Murnaghan–Nakayama rule.
pub fn character(p: &Partition, c: &CycleType) -> i64 {
    assert_eq!(p.n(), c.n(), "character: {p} and class {c} have different sizes");
    let len = p.len();
    // β-set: distinct first-column hook lengths
    let beta: Vec<usize> = p.parts().iter().enumerate().map(|(i, &r)| r + (len - 1 - i)).collect();
    let mut cycles: Vec<usize> = c.partition().parts().to_vec();
    cycles.sort_unstable();
    mn(&beta, &cycles)
}

fn mn(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_last() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    group: Group,
    classes: Vec<ClassLabel>,
    class_sizes: Vec<u64>,
    irreps: Vec<IrrepLabel>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order(self.n)
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn irreps(&self) -> &[IrrepLabel] {
        &self.irreps
    }

    /// Row `i` of the table (irrep `i` over all classes).
    pub fn row(&self, irrep: usize) -> &[i64] {
        &self.values[irrep]
    }

    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.values[irrep][class]
    }

    pub fn irrep_index(&self, label: &IrrepLabel) -> Option<usize> {
        self.irreps.iter().position(|l| l == label)
    }

    pub fn class_index(&self, label: &ClassLabel) -> Option<usize> {
        self.classes.iter().position(|l| l == label)
    }

    /// Irrep dimensions (character at the identity).
    pub fn dimensions(&self) -> Vec<u64> {
        self.values.iter().map(|row| row[0] as u64).collect()
    }
}

fn check_table_n(n: usize) -> Result<()> {
    if !(2..=MAX_TABLE_PARTICLES).contains(&n) {
        return Err(invalid(format!("character tables need 2 ≤ N ≤ {MAX_TABLE_PARTICLES}, got {n}")));
    }
    Ok(())
}

pub fn character_table_sn(n: usize) -> Result<CharacterTable> {
    check_table_n(n)?;
    let classes = class_labels(n, Group::Symmetric)?;
    let irreps = irrep_labels(n, Group::Symmetric)?;
    let values =
        irreps.iter().map(|ir| classes.iter().map(|c| character(&ir.partition, &c.cycle_type)).collect()).collect();
    let class_sizes = classes.iter().map(|c| c.cycle_type.class_size()).collect();
    Ok(CharacterTable { n, group: Group::Symmetric, classes, class_sizes, irreps, values })
}

/// `χ^{[p]^π}(c) = χ^{[p]}(c)` and `χ^{[p]^π}(i·c) = π χ^{[p]}(c)`.
pub fn character_table_snz2(n: usize) -> Result<CharacterTable> {
    let base = character_table_sn(n)?;
    let classes = class_labels(n, Group::SymmetricParity)?;
    let irreps = irrep_labels(n, Group::SymmetricParity)?;
    let k = base.classes.len();
    let values = irreps
        .iter()
        .map(|ir| {
            let b = base
                .irrep_index(&IrrepLabel { partition: ir.partition.clone(), parity: None })
                .expect("same partitions");
            let pi = ir.parity.expect("doubled irrep").sign();
            (0..2 * k).map(|c| if c < k { base.values[b][c] } else { pi * base.values[b][c - k] }).collect()
        })
        .collect();
    let class_sizes = classes.iter().map(|c| c.cycle_type.class_size()).collect();
    Ok(CharacterTable { n, group: Group::SymmetricParity, classes, class_sizes, irreps, values })
}

/// A class function, one exact value per conjugacy class in
/// [`class_labels`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub group: Group,
    pub values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(n: usize, group: Group, values: Vec<i64>) -> Self {
        ClassFunction { n, group, values }
    }

    /// The regular representation: `|G|` at the identity, zero elsewhere.
    pub fn regular(n: usize, group: Group) -> Result<Self> {
        let len = class_labels(n, group)?.len();
        let mut values = vec![0; len];
        values[0] = group.order(n) as i64;
        Ok(ClassFunction { n, group, values })
    }
}

/// Irrep multiplicities `a_μ = (1/|G|) Σ_c |c| χ^μ(c) f(c)`, in table
/// irrep order. Characters here are real, so no conjugation is needed.
pub fn reduce_class_function(f: &ClassFunction, table: &CharacterTable) -> Result<Vec<u64>> {
    if f.n != table.n || f.group != table.group {
        return Err(invalid("class function and character table belong to different groups"));
    }
    if f.values.len() != table.classes.len() {
        return Err(Error::SizeMismatch { expected: table.classes.len(), found: f.values.len() });
    }
    let order = table.order() as i128;
    table
        .irreps
        .iter()
        .enumerate()
        .map(|(mu, label)| {
            let sum: i128 = (0..f.values.len())
                .map(|c| table.class_sizes[c] as i128 * table.values[mu][c] as i128 * f.values[c] as i128)
                .sum();
            if sum % order != 0 || sum < 0 {
                return Err(Error::NotARepresentation(format!("multiplicity of {label} would be {sum}/{order}")));
            }
            Ok((sum / order) as u64)
        })
        .collect()
}

/// Number of semistandard fillings of `shape` by the multiset `content`
/// (rows weakly increasing, columns strictly increasing).
pub fn kostka(shape: &Partition, content: &[usize]) -> Result<u64> {
    if shape.n() != content.len() {
        return Err(Error::SizeMismatch { expected: shape.n(), found: content.len() });
    }
    let mut sorted = content.to_vec();
    sorted.sort_unstable();
    let mut weights = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let run = sorted[i..].iter().take_while(|&&v| v == sorted[i]).count();
        weights.push(run);
        i += run;
    }
    Ok(kostka_by_weights(shape, &weights))
}

/// Kostka number for a weight vector (multiplicity of each distinct value,
/// in increasing value order). The result does not depend on the order.
pub fn kostka_by_weights(shape: &Partition, weights: &[usize]) -> u64 {
    let total: usize = weights.iter().sum();
    if total != shape.n() {
        return 0;
    }
    let mut w = weights.to_vec();
    w.retain(|&x| x > 0);
    // larger strips first keeps the recursion shallow
    w.sort_unstable();
    strips(shape.parts(), &w)
}

fn strips(shape: &[usize], weights: &[usize]) -> u64 {
    let Some((&last, rest)) = weights.split_last() else {
        return u64::from(shape.iter().all(|&r| r == 0));
    };
    let mut total = 0;
    let mut inner = vec![0usize; shape.len()];
    remove_strip(shape, 0, last, &mut inner, rest, &mut total);
    total
}

// Chooses inner row lengths μ with λ_{r+1} ≤ μ_r ≤ λ_r removing `left` boxes.
fn remove_strip(shape: &[usize], row: usize, left: usize, inner: &mut [usize], rest: &[usize], total: &mut u64) {
    if row == shape.len() {
        if left == 0 {
            let end = inner.iter().position(|&x| x == 0).unwrap_or(inner.len());
            *total += strips(&inner[..end], rest);
        }
        return;
    }
    let hi = shape[row];
    let lo = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (hi - lo).min(left);
    for take in 0..=max_take {
        inner[row] = hi - take;
        remove_strip(shape, row + 1, left - take, inner, rest, total);
    }
    inner[row] = 0;
}
