//! One function per subcommand, each returning a [`Report`].

use num_bigint::BigInt;
use num_traits::Zero;
use symtrap_core::branching::{
    branch_multiplicity, branch_multiplicity_by_characters, component_degeneracy_cached, cumulative_shell_degeneracy,
    spin_decomposition, table_patterns, ComponentPattern, Statistics, YoungSubgroupIrrep,
};
use symtrap_core::character::{character_table_sn, character_table_snz2, kostka_by_weights, CharacterTable, Group};
use symtrap_core::mapping::{parse_state, GNLabel, Regime, Spectroscopy, StateLabel};
use symtrap_core::oracle::{
    explicit_sector_rep, explicit_shell_rep, GroupElement, MAX_SECTOR_PARTICLES, MAX_SHELL_EXCITATION,
    MAX_SHELL_PARTICLES,
};
use symtrap_core::oscillator::{shell_dimension, shell_reduction, LambdaReductions};
use symtrap_core::partition::{bounded_partitions, partitions_of};
use symtrap_core::perm::Permutation;
use symtrap_core::snippet::{
    in_orthogonal_span, sector_rep_characters, snippet_component_basis, snippet_projection_basis, snippet_reduction,
    SectorSpace, SectorVector,
};
use symtrap_core::{Parity, Partition};

use crate::error::{CliError, CliResult};
use crate::report::{Cell, Report};

fn partition_columns(n: usize) -> CliResult<Vec<String>> {
    Ok(partitions_of(n)?.iter().map(|p| p.to_string()).collect())
}

fn mismatch(what: impl Into<String>) -> CliError {
    CliError::Consistency(what.into())
}

fn skipped(report: &mut Report, why: &str) {
    report.note(format!("verification skipped: {why}"));
}

pub fn chartable(n: usize, group: Group, verify: bool) -> CliResult<Report> {
    let table = match group {
        Group::Symmetric => character_table_sn(n)?,
        Group::SymmetricParity => character_table_snz2(n)?,
    };
    let mut columns = vec!["irrep".to_string()];
    columns.extend(table.classes().iter().map(|c| c.to_string()));
    let name = match group {
        Group::Symmetric => format!("Character table of S_{n}"),
        Group::SymmetricParity => format!("Character table of S_{n} x Z2"),
    };
    let mut report = Report::new("chartable", n, name, columns);
    for (i, irrep) in table.irreps().iter().enumerate() {
        let mut row = vec![match irrep.parity {
            Some(pi) => Cell::irrep(&irrep.partition, pi),
            None => Cell::partition(&irrep.partition),
        }];
        row.extend(table.row(i).iter().map(|&v| Cell::int(v)));
        report.push(row);
    }
    if group == Group::SymmetricParity {
        for lp in [Parity::Plus, Parity::Minus] {
            let chi = sector_rep_characters(n, lp)?;
            let mut row = vec![Cell::text(format!("sectors, {} lambda", lp.lambda_name()))];
            row.extend(chi.values.iter().map(|&v| Cell::int(v)));
            report.push(row);
        }
    }
    if verify {
        check_orthogonality(&table)?;
        report.note("verified: row and column orthogonality");
    }
    Ok(report)
}

fn check_orthogonality(t: &CharacterTable) -> CliResult<()> {
    let k = t.classes().len();
    let order = t.order() as i128;
    for a in 0..t.irreps().len() {
        for b in 0..t.irreps().len() {
            let s: i128 =
                (0..k).map(|c| t.class_sizes()[c] as i128 * t.value(a, c) as i128 * t.value(b, c) as i128).sum();
            if s != if a == b { order } else { 0 } {
                return Err(mismatch(format!("rows {a} and {b} are not orthogonal")));
            }
        }
    }
    for c in 0..k {
        for d in 0..k {
            let s: i128 = (0..t.irreps().len()).map(|a| t.value(a, c) as i128 * t.value(a, d) as i128).sum();
            let expect = if c == d { order / t.class_sizes()[c] as i128 } else { 0 };
            if s != expect {
                return Err(mismatch(format!("columns {c} and {d} are not orthogonal")));
            }
        }
    }
    Ok(())
}

pub fn reduce_shell(n: usize, max_x: u64, verify: bool) -> CliResult<Report> {
    let mut columns = vec!["X".to_string()];
    columns.extend(partition_columns(n)?);
    columns.push("dim".to_string());
    let mut report = Report::new("reduce-shell", n, format!("S_{n} content of each oscillator shell H_X"), columns);
    let mut verified = 0;
    for x in 0..=max_x {
        let red = shell_reduction(n, x)?;
        let dim = shell_dimension(n, x)?;
        if dim != red.dimension().into() {
            return Err(mismatch(format!("shell X={x}: reduction has dimension {} but d = {dim}", red.dimension())));
        }
        let mut row = vec![Cell::int(x)];
        row.extend(red.counts().iter().map(|&c| Cell::int(c)));
        row.push(Cell::big(&BigInt::from(dim)));
        report.push(row);
        if verify && n <= MAX_SHELL_PARTICLES && x <= MAX_SHELL_EXCITATION {
            let (_, explicit) = explicit_shell_rep(n, x)?;
            if explicit != red {
                return Err(mismatch(format!("shell X={x}: explicit representation gives {:?}", explicit.counts())));
            }
            verified += 1;
        }
    }
    if verify {
        verification_note(&mut report, verified, max_x + 1, "shells", "explicit representation needs N ≤ 5, X ≤ 8");
    }
    Ok(report)
}

fn verification_note(report: &mut Report, done: u64, total: u64, what: &str, guard: &str) {
    if done == total {
        report.note(format!("verified: all {total} {what} against explicit representations"));
    } else if done == 0 {
        skipped(report, guard);
    } else {
        report.note(format!("verified: {done} of {total} {what}; the rest exceed the guard ({guard})"));
    }
}

pub fn reduce_lambda(n: usize, max_lambda: u32, verify: bool) -> CliResult<Report> {
    let mut columns = vec!["lambda".to_string()];
    columns.extend(partition_columns(n)?);
    let mut report = Report::new("reduce-lambda", n, format!("S_{n} content of each lambda subspace"), columns);
    let mut cache = LambdaReductions::new(n)?;
    for l in 0..=max_lambda {
        let mut row = vec![Cell::int(l)];
        row.extend(cache.get(l)?.counts().iter().map(|&c| Cell::int(c)));
        report.push(row);
    }
    if verify {
        let top = max_lambda as u64;
        if n <= MAX_SHELL_PARTICLES {
            let mut done = 0;
            for x in 0..=top.min(MAX_SHELL_EXCITATION) {
                let (_, explicit) = explicit_shell_rep(n, x)?;
                let mut sum = symtrap_core::oscillator::MultiplicityVector::zeros(n)?;
                for lower in 0..=x as u32 {
                    sum.add_scaled(cache.get(lower)?, (x - lower as u64) / 2 + 1);
                }
                if explicit != sum {
                    return Err(mismatch(format!("lambda reductions do not rebuild shell X={x}")));
                }
                done += 1;
            }
            verification_note(
                &mut report,
                done,
                top + 1,
                "shells rebuilt from lambda rows",
                "explicit representation needs X ≤ 8",
            );
        } else {
            skipped(&mut report, "explicit representation needs N ≤ 5");
        }
    }
    Ok(report)
}

pub fn reduce_snippet(n: usize, verify: bool) -> CliResult<Report> {
    let columns = vec!["irrep".to_string(), "even lambda".to_string(), "odd lambda".to_string()];
    let mut report =
        Report::new("reduce-snippet", n, format!("S_{n} x Z2 content of the {n}!-dimensional sector space"), columns);
    let even = snippet_reduction(n, Parity::Plus)?;
    let odd = snippet_reduction(n, Parity::Minus)?;
    for pi in [Parity::Plus, Parity::Minus] {
        for p in partitions_of(n)? {
            report.push(vec![Cell::irrep(&p, pi), Cell::int(even.get(&p, pi)), Cell::int(odd.get(&p, pi))]);
        }
    }
    if verify {
        if n <= MAX_SECTOR_PARTICLES {
            let oracle = explicit_sector_rep(n)?;
            if oracle.even_reduction != even || oracle.odd_reduction != odd {
                return Err(mismatch("explicit sector representation disagrees with the character count"));
            }
            report.note("verified: explicit sector representation, both lambda parities");
        } else {
            skipped(&mut report, "explicit sector representation needs N ≤ 6");
        }
    }
    Ok(report)
}

/// Pattern from `--pattern` and optional `--stats`.
pub fn parse_pattern(pattern: &str, stats: Option<Statistics>) -> CliResult<ComponentPattern> {
    match stats {
        None => Ok(pattern.parse()?),
        Some(st) => {
            let body = pattern.trim().trim_start_matches('(').trim_end_matches(')');
            let counts: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|x| x.trim().parse().map_err(|_| CliError::Input(format!("bad occupation `{x}`"))))
                    .collect::<CliResult<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| CliError::Input(format!("bad pattern `{pattern}`")))
                    })
                    .collect::<CliResult<_>>()?
            };
            Ok(ComponentPattern::new(counts, st)?)
        }
    }
}

fn patterns_or_table(n: usize, pattern: Option<ComponentPattern>) -> CliResult<Vec<ComponentPattern>> {
    Ok(match pattern {
        Some(p) => {
            if p.n() != n {
                return Err(CliError::Input(format!("pattern {p} has {} particles, not {n}", p.n())));
            }
            vec![p]
        }
        None => {
            let mut all = table_patterns(n)?;
            all.push(ComponentPattern::distinguishable(n));
            all
        }
    })
}

pub fn branch(n: usize, pattern: Option<ComponentPattern>, verify: bool) -> CliResult<Report> {
    let mut columns = vec!["components".to_string(), "pattern".to_string()];
    columns.extend(partition_columns(n)?);
    let mut report =
        Report::new("branch", n, format!("Multiplicity of each component pattern in the S_{n} irreps"), columns);
    let shapes = partitions_of(n)?;
    for pat in patterns_or_table(n, pattern)? {
        let mut row = vec![Cell::int(pat.components()), Cell::text(pat.to_string())];
        for p in &shapes {
            let m = branch_multiplicity(p, &pat)?;
            if verify && branch_multiplicity_by_characters(p, &pat)? != m {
                return Err(mismatch(format!("{p} in {pat}: Kostka and character routes disagree")));
            }
            row.push(Cell::int(m));
        }
        report.push(row);
    }
    if verify {
        report.note("verified: character inner product over the Young subgroup");
    }
    Ok(report)
}

pub enum DegeneracyAxis {
    Lambda(u32),
    Shell(u64),
}

pub fn degeneracy_table(
    n: usize,
    axis: DegeneracyAxis,
    pattern: Option<ComponentPattern>,
    verify: bool,
) -> CliResult<Report> {
    let patterns = patterns_or_table(n, pattern)?;
    let (title, top, prefix) = match axis {
        DegeneracyAxis::Lambda(l) => {
            (format!("Component-pattern states in each lambda subspace, N={n}"), l as u64, "lambda=")
        }
        DegeneracyAxis::Shell(x) => (format!("Component-pattern states in each shell H_X, N={n}"), x, "X="),
    };
    let mut columns = vec!["pattern".to_string()];
    columns.extend((0..=top).map(|v| format!("{prefix}{v}")));
    let mut report = Report::new("degeneracy-table", n, title, columns);
    let mut cache = match axis {
        DegeneracyAxis::Lambda(_) => Some(LambdaReductions::new(n)?),
        DegeneracyAxis::Shell(_) => None,
    };
    for pat in &patterns {
        let mut row = vec![Cell::text(pat.to_string())];
        for v in 0..=top {
            let d = match cache.as_mut() {
                Some(c) => component_degeneracy_cached(c, v as u32, pat)?,
                None => cumulative_shell_degeneracy(n, v, pat)?,
            };
            row.push(Cell::int(d));
        }
        report.push(row);
    }
    if verify {
        let shapes = partitions_of(n)?;
        for pat in &patterns {
            for p in &shapes {
                if branch_multiplicity_by_characters(p, pat)? != branch_multiplicity(p, pat)? {
                    return Err(mismatch(format!("{p} in {pat}: Kostka and character routes disagree")));
                }
            }
        }
        report.note("verified: branching multiplicities by character inner products");
    }
    Ok(report)
}

pub fn spin_decompose(n: usize, k: usize, verify: bool) -> CliResult<Report> {
    let red = spin_decomposition(n, k)?;
    let mut columns = vec!["components".to_string()];
    columns.extend(partition_columns(n)?);
    columns.push("dim".to_string());
    let mut report =
        Report::new("spin-decompose", n, format!("S_{n} content of the spin space of {k} components"), columns);
    let mut row = vec![Cell::int(k)];
    row.extend(red.counts().iter().map(|&c| Cell::int(c)));
    row.push(Cell::int(red.dimension()));
    report.push(row);
    if verify {
        // Σ over weight vectors of Kostka numbers counts the same tableaux
        for (p, count) in red.iter() {
            let mut total = 0;
            for w in bounded_partitions(n, k, n) {
                let mut weights = w.clone();
                weights.resize(k, 0);
                total += kostka_by_weights(p, &weights) * distinct_orderings(&weights);
            }
            if total != count {
                return Err(mismatch(format!("{p}: hook-content gives {count}, Kostka sum gives {total}")));
            }
        }
        report.note("verified: semistandard tableaux counted by Kostka numbers");
    }
    Ok(report)
}

fn distinct_orderings(weights: &[usize]) -> u64 {
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    let mut out: u64 = (1..=sorted.len() as u64).product();
    let mut i = 0;
    while i < sorted.len() {
        let run = sorted[i..].iter().take_while(|&&v| v == sorted[i]).count();
        out /= (1..=run as u64).product::<u64>();
        i += run;
    }
    out
}

fn regime_note(report: &mut Report, regime: Regime, n: usize, verify: bool) -> CliResult<()> {
    if verify && regime == Regime::HardCore {
        if n <= MAX_SECTOR_PARTICLES {
            let oracle = explicit_sector_rep(n)?;
            for lp in [Parity::Plus, Parity::Minus] {
                if *oracle.reduction(lp) != snippet_reduction(n, lp)? {
                    return Err(mismatch("explicit sector representation disagrees with the character count"));
                }
            }
            report.note("verified: sector reductions against explicit representation");
        } else {
            skipped(report, "explicit sector representation needs N ≤ 6");
        }
    }
    Ok(())
}

pub fn spectrum(n: usize, regime: Regime, mu: GNLabel, max_x: u64, verify: bool) -> CliResult<Report> {
    let columns = ["energy", "nu_R", "nu_rho", "lambda", "multiplicity"].map(String::from).to_vec();
    let title = format!("Levels carrying {{{}, {}, {}}} at {regime}", mu.nu_r, mu.pi, mu.p);
    let mut report = Report::new("spectrum", n, title, columns);
    let mut sp = Spectroscopy::new(n)?;
    let entries = sp.spectrum(regime, &mu, max_x)?;
    for (i, e) in entries.iter().enumerate() {
        if entries.iter().skip(i + 1).any(|o| o.energy == e.energy) {
            report.note(format!("levels at {} are convention-ordered (lambda, then nu_rho)", e.energy));
        }
        report.push(vec![
            Cell::text(e.energy.to_string()),
            Cell::int(e.label.nu_r),
            Cell::int(e.label.nu_rho),
            Cell::int(e.label.lambda),
            Cell::int(e.multiplicity),
        ]);
    }
    regime_note(&mut report, regime, n, verify)?;
    Ok(report)
}

pub struct MapRequest {
    pub state: String,
    pub component: Option<String>,
    pub tau: u64,
    pub ceiling: Option<u64>,
}

pub fn map(n: usize, req: MapRequest, verify: bool) -> CliResult<Report> {
    let (hyper, p) = parse_state(&req.state)?;
    if p.n() != n {
        return Err(CliError::Input(format!("{p} is not a partition of {n}")));
    }
    let tag = req.component.as_deref().map(str::parse::<YoungSubgroupIrrep>).transpose()?;
    let source = StateLabel::free(hyper, p, req.tau, tag);
    let mut sp = Spectroscopy::new(n)?;
    let result = sp.adiabatic_map(&source, req.ceiling)?;
    let columns = ["source", "rank", "target", "irrep", "dim", "status"].map(String::from).to_vec();
    let mut report = Report::new("map", n, format!("Adiabatic image of {source}"), columns);
    report.push(vec![
        Cell::text(source.to_string()),
        Cell::int(result.rank),
        Cell::text(result.target.to_string()),
        Cell::irrep(&result.target_p, result.target_pi),
        Cell::int(result.target_dimension),
        Cell::text(if result.resolved { "resolved" } else { "unresolved" }),
    ]);
    report.note(format!("target: {}", result.summary()));
    if result.convention_ordered {
        report.note("equal-energy levels within this irrep were ordered by lambda, then nu_rho");
    }
    regime_note(&mut report, Regime::HardCore, n, verify)?;
    Ok(report)
}

pub fn ground_state(
    n: usize,
    pattern: ComponentPattern,
    regime: Regime,
    ceiling: Option<u64>,
    verify: bool,
) -> CliResult<Report> {
    let mut sp = Spectroscopy::new(n)?;
    let states = sp.ground_state(&pattern, regime, ceiling)?;
    let columns = ["energy", "nu_R", "nu_rho", "lambda", "irrep", "tau", "component"].map(String::from).to_vec();
    let mut report = Report::new("ground-state", n, format!("Lowest states of {pattern} at {regime}"), columns);
    for s in &states {
        report.push(vec![
            Cell::text(s.energy().to_string()),
            Cell::int(s.hyper.nu_r),
            Cell::int(s.hyper.nu_rho),
            Cell::int(s.hyper.lambda),
            Cell::irrep(&s.p, s.pi),
            Cell::int(s.tau),
            Cell::text(s.component_tag.as_ref().map_or_else(|| "-".to_string(), |t| t.to_string())),
        ]);
    }
    regime_note(&mut report, regime, n, verify)?;
    Ok(report)
}

pub struct BasisRequest {
    pub irrep: Partition,
    pub pi: Parity,
    pub lambda_parity: Parity,
    pub component: Option<String>,
}

pub fn sector_basis(n: usize, req: BasisRequest, verify: bool) -> CliResult<Report> {
    let space = SectorSpace::new(n)?;
    let tag = req.component.as_deref().map(str::parse::<YoungSubgroupIrrep>).transpose()?;
    let (labels, vectors): (Vec<String>, Vec<_>) = match &tag {
        Some(tag) => {
            let vs = snippet_component_basis(n, req.lambda_parity, &req.irrep, req.pi, tag)?;
            vs.into_iter()
                .enumerate()
                .map(|(i, v)| (format!("v{} {}{} {tag} norm^2={}", i + 1, req.irrep, req.pi, v.norm_sq()), v))
                .unzip()
        }
        None => snippet_projection_basis(n, req.lambda_parity, &req.irrep, req.pi)?
            .into_iter()
            .enumerate()
            .map(|(i, b)| (format!("v{} {} norm^2={}", i + 1, b.label, b.vector.norm_sq()), b.vector))
            .unzip(),
    };
    let mut columns = vec!["sector".to_string()];
    columns.extend((1..=vectors.len()).map(|i| format!("v{i}")));
    let title = format!("Sector amplitudes of {}{} at {} lambda", req.irrep, req.pi, req.lambda_parity.lambda_name());
    let mut report = Report::new("sector-basis", n, title, columns);
    for (s, ordering) in space.sectors().iter().enumerate() {
        let mut row = vec![Cell::text(ordering.ordering_label())];
        row.extend(vectors.iter().map(|v| Cell::big(&v.amplitudes()[s])));
        report.push(row);
    }
    for l in labels {
        report.note(l);
    }
    if vectors.is_empty() {
        report.note(format!("{}{} does not occur at {} lambda", req.irrep, req.pi, req.lambda_parity.lambda_name()));
    }
    if verify {
        let symmetries = match &tag {
            // a tagged span is invariant only under its Young subgroup and the inversion
            Some(tag) => {
                let mut gs = vec![GroupElement::inversion(n)];
                let mut start = 0;
                for len in tag.blocks(n)? {
                    for a in start..start + len - 1 {
                        gs.push(GroupElement::permutation(Permutation::transposition(n, a, a + 1)));
                    }
                    start += len;
                }
                gs
            }
            None => {
                let mut gs = vec![GroupElement::inversion(n)];
                gs.extend((0..n - 1).map(|a| GroupElement::permutation(Permutation::transposition(n, a, a + 1))));
                gs
            }
        };
        verify_basis(&space, &vectors, req.lambda_parity, &symmetries)?;
        report.note("verified: orthogonality and closure under the symmetry generators");
    }
    Ok(report)
}

fn verify_basis(
    space: &SectorSpace,
    vectors: &[SectorVector],
    lambda_parity: Parity,
    symmetries: &[GroupElement],
) -> CliResult<()> {
    for (i, a) in vectors.iter().enumerate() {
        if vectors[..i].iter().any(|b| !a.dot(b).is_zero()) {
            return Err(mismatch("basis vectors are not orthogonal"));
        }
    }
    if vectors.is_empty() {
        return Ok(());
    }
    let oracle = explicit_sector_rep(space.n())?;
    let rep = oracle.rep(lambda_parity);
    for g in symmetries {
        let m = rep.matrix(g);
        for v in vectors {
            let mut image = vec![BigInt::zero(); v.amplitudes().len()];
            for (col, x) in v.amplitudes().iter().enumerate() {
                let (row, sign) = m.entry(col);
                image[row] = if sign < 0 { -x } else { x.clone() };
            }
            if !in_orthogonal_span(vectors, &image) {
                return Err(mismatch("span is not closed under the group action"));
            }
        }
    }
    Ok(())
}
