//! Check registry: one function per check id.

use super::{CheckSpec, Span};
use crate::double::conjectures::check_interleaving_conjecture;
use crate::double::{
    check_double_rank, check_three_way, double_slope_report, run_double, strictly_increasing,
};
use crate::error::{Error, Result};
use crate::golden::{
    check_fibonacci_invariance, check_p_positions, check_partition, check_pointer_survivor,
    check_rank_identity, check_selfref_identity, check_two_gap, normalize, run_golden,
    survivors_beatty_prefix, NormalizedPair,
};
use crate::ground::GroundSequence;
use crate::hiccup::{
    check_extraction_equiv, check_half_line, extraction_run, extraction_run_literal,
    extraction_trace, hiccup_generate, HiccupParams,
};
use crate::oeis::compare;
use crate::oeis::fixtures::{check_fixtures, fixture};
use crate::par;
use crate::quad::slopes::{
    double_survivor_slope, double_survivor_slope_compound, double_target_slope, metallic_slopes,
    phi, slope_gamma,
};
use crate::quad::{cf_expand, check_cf_families, QuadSurd, DEFAULT_CF_STEPS};
use crate::rank_transform::{check_equivalence, fixed_point};
use crate::squares::{
    check_counting_consistency, check_meta_hiccup, check_nested_identity, check_squares_rank,
    check_tower_residuals, counting_identity_failures, run_squares, run_squares_with,
};
use crate::word::{
    beatty_check, check_golden_mechanical, factor_complexity, gap_word, ones_density,
    reconstruct_sigma, sturmian_verdict, BeattyForm, BinaryWord, SturmianVerdict,
};

#[derive(Debug, Clone, Default)]
pub(super) struct Outcome {
    pub passed: bool,
    pub points: usize,
    pub max_residual: Option<u64>,
    pub first_failure: Option<String>,
    pub detail: String,
}

type CheckFn = fn(&CheckSpec) -> Result<Outcome>;

const REGISTRY: &[(&str, CheckFn)] = &[
    ("golden.worked-example", golden_worked_example),
    ("golden.rank-identity", golden_rank_identity),
    ("golden.two-gap", golden_two_gap),
    ("golden.self-reference", golden_self_reference),
    ("golden.partition", golden_partition),
    ("golden.p-positions", golden_p_positions),
    ("golden.pointer-survivor", golden_pointer_survivor),
    ("golden.beatty", golden_beatty),
    ("golden.fibonacci", golden_fibonacci),
    ("word.gap-prefixes", word_gap_prefixes),
    ("word.round-trip", word_round_trip),
    ("word.density", word_density),
    ("word.complexity-binary", word_complexity_binary),
    ("word.sturmian-golden", word_sturmian_golden),
    ("word.mechanical", word_mechanical),
    ("word.sturmian-verdicts", word_sturmian_verdicts),
    ("double.worked-example", double_worked_example),
    ("double.rank-identity", double_rank_identity),
    ("double.three-way", double_three_way),
    ("double.pointer-slope", double_pointer_slope),
    ("double.survivor-slope", double_survivor_slope_check),
    ("double.interleaving", double_interleaving),
    ("squares.prefixes", squares_prefixes),
    ("squares.rank-identity", squares_rank_identity),
    ("squares.nested-identity", squares_nested_identity),
    ("squares.meta-hiccup", squares_meta_hiccup),
    ("squares.counting", squares_counting),
    ("squares.counting-small", squares_counting_small),
    ("squares.tower", squares_tower),
    ("squares.tower-extended", squares_tower),
    ("extraction.silver-examples", extraction_silver_examples),
    (
        "extraction.affine-equivalence",
        extraction_affine_equivalence,
    ),
    ("extraction.half-line", extraction_half_line),
    ("extraction.literal-agreement", extraction_literal_agreement),
    ("hiccup.metallic", hiccup_metallic),
    ("hiccup.reverse-metallic", hiccup_reverse_metallic),
    ("hiccup.shift-zero-large", hiccup_shift_zero_large),
    ("hiccup.shift-zero-small", hiccup_shift_zero_small),
    ("hiccup.named-rows", hiccup_named_rows),
    ("cf.families", cf_families),
    ("cf.powers-of-two", cf_powers_of_two),
    ("cf.named-expansions", cf_named_expansions),
    ("rank.equivalence", rank_equivalence),
    ("rank.closed-forms", rank_closed_forms),
    ("oeis.fixtures", oeis_fixtures),
    ("oeis.fraenkel", oeis_fraenkel),
];

pub const CHECK_IDS: &[&str] = &{
    let mut ids = [""; REGISTRY.len()];
    let mut i = 0;
    while i < REGISTRY.len() {
        ids[i] = REGISTRY[i].0;
        i += 1;
    }
    ids
};

pub fn known_check(id: &str) -> bool {
    REGISTRY.iter().any(|(k, _)| *k == id)
}

pub(super) fn run(spec: &CheckSpec) -> Result<Outcome> {
    let f = REGISTRY
        .iter()
        .find(|(k, _)| *k == spec.id)
        .map(|(_, f)| f)
        .ok_or_else(|| Error::Catalogue(format!("unknown check {}", spec.id)))?;
    f(spec)
}

// ---- parameter helpers ----

fn missing(spec: &CheckSpec, name: &str) -> Error {
    Error::Catalogue(format!("check {} needs parameter {name}", spec.id))
}

fn span(spec: &CheckSpec, v: Option<Span>, name: &str) -> Result<Span> {
    v.ok_or_else(|| missing(spec, name))
}

fn n_of(spec: &CheckSpec) -> Result<u64> {
    spec.n.ok_or_else(|| missing(spec, "n"))
}

fn len_of(spec: &CheckSpec) -> Result<u64> {
    spec.len.ok_or_else(|| missing(spec, "len"))
}

fn tol_of(spec: &CheckSpec) -> Result<f64> {
    spec.tol.ok_or_else(|| missing(spec, "tol"))
}

/// `(a, b)` points with `b_min <= b < a`, restricted by an explicit `b` span.
fn ab_points(spec: &CheckSpec, b_min: u64) -> Result<Vec<(u64, u64)>> {
    let a = span(spec, spec.a, "a")?;
    Ok(a.iter()
        .flat_map(|a| (b_min..a).map(move |b| (a, b)))
        .filter(|&(_, b)| spec.b.is_none_or(|s| (s.0..=s.1).contains(&b)))
        .collect())
}

fn ab_label(&(a, b): &(u64, u64)) -> String {
    format!("a = {a}, b = {b}")
}

fn a_label(a: &u64) -> String {
    format!("a = {a}")
}

fn k_label(k: &u64) -> String {
    format!("k = {k}")
}

fn ext_label(&(j, y, z, a, b): &(u64, u64, u64, u64, u64)) -> String {
    format!("j = {j}, y = {y}, z = {z}, a = {a}, b = {b}")
}

fn ground(a: u64, b: u64) -> Result<GroundSequence> {
    if (a, b) == (1, 0) {
        Ok(GroundSequence::Naturals)
    } else {
        GroundSequence::arith(a, b)
    }
}

fn pair(a: u64, b: u64, n: u64) -> Result<NormalizedPair> {
    normalize(&run_golden(&ground(a, b)?, n, n)?)
}

/// Gap word of the normalized survivors on `aN+b`, `len` bits from `H(2)`.
fn sieve_word(a: u64, b: u64, len: u64) -> Result<BinaryWord> {
    let p = pair(a, b, len + 1)?;
    gap_word(&p.sigma[..len as usize + 1], 1)
}

/// Evaluates `f` at every point, in parallel, tagging errors with the point.
fn grid<P, R, L, F>(spec: &CheckSpec, points: &[P], label: L, f: F) -> Result<Vec<(String, R)>>
where
    P: Sync,
    R: Send,
    L: Fn(&P) -> String + Sync + Send,
    F: Fn(&P) -> Result<R> + Sync + Send,
{
    par::map(points, |p| {
        let label = label(p);
        f(p).map(|r| (label.clone(), r))
            .map_err(|e| Error::AtPoint {
                check: spec.id.clone(),
                point: label,
                source: Box::new(e),
            })
    })
    .into_iter()
    .collect()
}

/// All residuals must be zero.
fn residuals(results: Vec<(String, u64)>) -> Outcome {
    let max = results.iter().map(|(_, r)| *r).max();
    let first_failure = results
        .iter()
        .find(|(_, r)| *r != 0)
        .map(|(p, r)| format!("{p}: residual {r}"));
    Outcome {
        passed: first_failure.is_none(),
        points: results.len(),
        max_residual: max,
        first_failure,
        detail: String::new(),
    }
}

/// Each point yields `None` on success or a failure description.
fn failures(results: Vec<(String, Option<String>)>) -> Outcome {
    let first_failure = results
        .iter()
        .find_map(|(p, f)| f.as_ref().map(|f| format!("{p}: {f}")));
    let count = results.iter().filter(|(_, f)| f.is_some()).count();
    Outcome {
        passed: first_failure.is_none(),
        points: results.len(),
        max_residual: None,
        first_failure,
        detail: if count > 0 {
            format!("{count} failing points")
        } else {
            String::new()
        },
    }
}

fn prefix_mismatch(name: &str, got: &[u64], want: &[u64]) -> Option<String> {
    if got.len() < want.len() {
        return Some(format!(
            "{name}: {} terms computed, {} expected",
            got.len(),
            want.len()
        ));
    }
    got.iter()
        .zip(want)
        .position(|(g, w)| g != w)
        .map(|i| format!("{name}({}) = {}, expected {}", i + 1, got[i], want[i]))
}

fn first_beatty_miss(seq: &[u64], form: &BeattyForm) -> Option<String> {
    beatty_check(seq, form).map(|n| {
        format!(
            "n = {n}: sequence {}, formula {}",
            seq[n as usize - 1],
            form.eval(n)
        )
    })
}

// ---- golden sieve and gap words ----

const EXAMPLE_DELETIONS: [u64; 13] = [1, 4, 7, 9, 12, 15, 17, 20, 22, 25, 28, 30, 33];
const EXAMPLE_SURVIVORS: [u64; 13] = [2, 3, 5, 6, 8, 10, 11, 13, 14, 16, 18, 19, 21];

fn golden_worked_example(_: &CheckSpec) -> Result<Outcome> {
    let t = run_golden(&GroundSequence::Naturals, 13, 13)?;
    let f = prefix_mismatch("d", &t.deletions, &EXAMPLE_DELETIONS)
        .or_else(|| prefix_mismatch("s", &t.survivors, &EXAMPLE_SURVIVORS));
    Ok(failures(vec![("N".into(), f)]))
}

fn golden_rank_identity(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts: Vec<_> = ab_points(spec, 0)?
        .into_iter()
        .filter(|&p| p != (1, 0))
        .collect();
    Ok(residuals(grid(spec, &pts, ab_label, |&(a, b)| {
        check_rank_identity(&pair(a, b, n)?)
    })?))
}

fn golden_two_gap(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts = ab_points(spec, 0)?;
    Ok(failures(grid(spec, &pts, ab_label, |&(a, b)| {
        let r = check_two_gap(&pair(a, b, n)?)?;
        Ok((!r.holds).then(|| {
            format!(
                "sigma gaps {:?}, delta gaps {:?}",
                r.sigma_gaps, r.delta_gaps
            )
        }))
    })?))
}

fn golden_self_reference(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts: Vec<_> = ab_points(spec, 0)?
        .into_iter()
        .filter(|&(a, _)| a >= 2)
        .collect();
    let res = grid(spec, &pts, ab_label, |&(a, b)| {
        check_selfref_identity(&pair(a, b, n)?, n as usize)
    })?;
    let checked: usize = res.iter().map(|(_, r)| r.checked).sum();
    let mut o = residuals(res.into_iter().map(|(p, r)| (p, r.max_residual)).collect());
    o.detail = format!("{checked} indices inside the computed range");
    Ok(o)
}

fn golden_partition(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts = ab_points(spec, 0)?;
    Ok(failures(grid(spec, &pts, ab_label, |&(a, b)| {
        let t = run_golden(&ground(a, b)?, n, n)?;
        Ok((!check_partition(&t)).then(|| "indices overlap or leave a hole".to_string()))
    })?))
}

fn golden_p_positions(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts: Vec<u64> = span(spec, spec.a, "a")?.iter().collect();
    Ok(residuals(grid(spec, &pts, a_label, |&a| {
        check_p_positions(a, n)
    })?))
}

fn golden_pointer_survivor(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let t = run_golden(&GroundSequence::Naturals, n, n)?;
    let f = check_pointer_survivor(&t, 2)
        .map(|k| format!("pointer {} at step {k}", t.steps[k as usize - 1].pointer));
    Ok(failures(vec![("N".into(), f)]))
}

fn golden_beatty(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let t = run_golden(&GroundSequence::Naturals, n, n)?;
    let f = prefix_mismatch("s", &t.survivors[..n as usize], &survivors_beatty_prefix(n));
    let mut o = failures(vec![("N".into(), f)]);
    o.points = n as usize;
    Ok(o)
}

fn golden_fibonacci(spec: &CheckSpec) -> Result<Outcome> {
    let k = span(spec, spec.k, "k")?;
    let k_hi = u32::try_from(k.1).map_err(|_| Error::Precondition("k out of range".into()))?;
    let rows: Vec<_> = check_fibonacci_invariance(k_hi)
        .into_iter()
        .filter(|r| r.k as u64 >= k.0)
        .collect();
    Ok(failures(
        rows.iter()
            .map(|r| {
                let f = (!r.holds())
                    .then(|| format!("s({}) = {}, F_(k+1) = {}", r.f_k, r.s_f_k, r.f_next));
                (format!("k = {}", r.k), f)
            })
            .collect(),
    ))
}

/// Printed prefixes of `H(2), H(3), …`.
pub(crate) const GAP_WORD_TABLE: [((u64, u64), &str); 4] = [
    ((1, 0), "0101101011011010110101101101011011010110"),
    ((2, 0), "1000101010100010100010100010100010101010"),
    ((2, 1), "0101000101000101010100010100010101010001"),
    ((3, 0), "0100100000100100100000100100100100100100"),
];

fn word_gap_prefixes(spec: &CheckSpec) -> Result<Outcome> {
    Ok(failures(grid(
        spec,
        &GAP_WORD_TABLE,
        |((a, b), _)| ab_label(&(*a, *b)),
        |&((a, b), want)| {
            let got = sieve_word(a, b, want.len() as u64)?.to_ascii();
            Ok((got != want).then(|| format!("got {got}")))
        },
    )?))
}

fn word_round_trip(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts = ab_points(spec, 0)?;
    Ok(failures(grid(spec, &pts, ab_label, |&(a, b)| {
        let sigma = pair(a, b, n)?.sigma;
        let back = reconstruct_sigma(&gap_word(&sigma, 1)?);
        Ok(prefix_mismatch("sigma", &back, &sigma))
    })?))
}

fn word_density(spec: &CheckSpec) -> Result<Outcome> {
    let (len, tol) = (len_of(spec)?, tol_of(spec)?);
    let pts: Vec<u64> = span(spec, spec.a, "a")?.iter().collect();
    let res = grid(spec, &pts, a_label, |&a| {
        let w = sieve_word(a, 0, len)?;
        Ok(ones_density(&w, Some(a)))
    })?;
    let worst = res
        .iter()
        .filter_map(|(_, r)| r.error)
        .fold(0.0f64, f64::max);
    let mut o = failures(
        res.into_iter()
            .map(|(p, r)| {
                let err = r.error.unwrap_or(f64::INFINITY);
                (
                    p,
                    (err >= tol).then(|| {
                        format!(
                            "density {:.6}, expected {}",
                            r.empirical,
                            r.theoretical.unwrap_or_default()
                        )
                    }),
                )
            })
            .collect(),
    );
    o.detail = format!("largest error {worst:.2e}, tolerance {tol:.0e}");
    Ok(o)
}

fn word_complexity_binary(spec: &CheckSpec) -> Result<Outcome> {
    let p = factor_complexity(&sieve_word(2, 0, len_of(spec)?)?, 3);
    Ok(failures(vec![(
        "(2, 0)".into(),
        (p[2] != 5).then(|| format!("p(3) = {}", p[2])),
    )]))
}

fn word_sturmian_golden(spec: &CheckSpec) -> Result<Outcome> {
    let p = factor_complexity(&sieve_word(1, 0, len_of(spec)?)?, n_of(spec)? as usize);
    let f = p
        .iter()
        .enumerate()
        .find(|&(i, &c)| c != i + 2)
        .map(|(i, c)| format!("p({}) = {c}", i + 1));
    Ok(failures(vec![("(1, 0)".into(), f)]))
}

fn word_mechanical(spec: &CheckSpec) -> Result<Outcome> {
    let w = sieve_word(1, 0, len_of(spec)?)?;
    Ok(failures(vec![(
        "(1, 0)".into(),
        check_golden_mechanical(&w).map(|i| format!("differs at bit {i}")),
    )]))
}

fn word_sturmian_verdicts(spec: &CheckSpec) -> Result<Outcome> {
    let (len, n) = (len_of(spec)?, n_of(spec)? as usize);
    let pts = ab_points(spec, 0)?;
    let res = grid(spec, &pts, ab_label, |&(a, b)| {
        Ok(sturmian_verdict(&sieve_word(a, b, len)?, n))
    })?;
    let refuted = res
        .iter()
        .filter(|(_, v)| matches!(v, SturmianVerdict::Refuted { .. }))
        .count();
    let mut o = failures(
        res.into_iter()
            .map(|(p, v)| {
                (
                    p,
                    matches!(v, SturmianVerdict::Consistent { .. }).then(|| v.to_string()),
                )
            })
            .collect(),
    );
    o.detail = format!("{refuted} of {} words refuted as Sturmian", o.points);
    Ok(o)
}

// ---- double sieve ----

fn double_worked_example(_: &CheckSpec) -> Result<Outcome> {
    let t = run_double(&GroundSequence::Naturals, 10)?;
    let h: Vec<u64> = t.steps.iter().map(|s| s.pointer).collect();
    let d: Vec<u64> = t.steps.iter().map(|s| s.target).collect();
    let f = prefix_mismatch("h", &h, &[1, 3, 6, 8, 11, 14, 16, 19, 21, 24])
        .or_else(|| prefix_mismatch("d", &d, &[1, 4, 9, 13, 18, 23, 27, 32, 36, 41]))
        .or_else(|| prefix_mismatch("s", &t.survivors, &[2, 5, 7, 10, 12, 15, 17, 20, 22, 25]));
    Ok(failures(vec![("N".into(), f)]))
}

fn double_rank_identity(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts = ab_points(spec, 0)?;
    Ok(residuals(grid(spec, &pts, ab_label, |&(a, b)| {
        Ok(check_double_rank(&run_double(&ground(a, b)?, n)?))
    })?))
}

fn double_three_way(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts = ab_points(spec, 0)?;
    Ok(failures(grid(spec, &pts, ab_label, |&(a, b)| {
        let t = run_double(&ground(a, b)?, n)?;
        let ok = check_three_way(&t)
            && strictly_increasing(&t.pointers)
            && strictly_increasing(&t.targets)
            && strictly_increasing(&t.survivors);
        Ok((!ok).then(|| "not a partition into increasing sequences".to_string()))
    })?))
}

fn double_pointer_slope(spec: &CheckSpec) -> Result<Outcome> {
    let (n, tol) = (n_of(spec)?, tol_of(spec)?);
    let pts: Vec<u64> = span(spec, spec.a, "a")?.iter().collect();
    let res = grid(spec, &pts, a_label, |&a| {
        let r = double_slope_report(&run_double(&ground(a, 0)?, n)?);
        let ep = (r.pointer_empirical - slope_gamma(a).to_f64()).abs();
        let et = (r.target_empirical - double_target_slope(a).to_f64()).abs();
        Ok((
            ep.max(et),
            format!(
                "pi/N {:.4} vs {}, tau/N {:.4} vs {}",
                r.pointer_empirical, r.gamma, r.target_empirical, r.target_slope
            ),
        ))
    })?;
    let worst = res.iter().map(|(_, (e, _))| *e).fold(0.0, f64::max);
    let mut o = failures(
        res.into_iter()
            .map(|(p, (e, d))| (p, (e >= tol).then_some(d)))
            .collect(),
    );
    o.detail = format!("largest deviation {worst:.2e} at N = {n}");
    Ok(o)
}

fn double_survivor_slope_check(spec: &CheckSpec) -> Result<Outcome> {
    let (n, tol) = (n_of(spec)?, tol_of(spec)?);
    let pts: Vec<u64> = span(spec, spec.a, "a")?.iter().collect();
    let res = grid(spec, &pts, a_label, |&a| {
        let r = double_slope_report(&run_double(&ground(a, 0)?, n)?);
        let e = (r.survivor_empirical - double_survivor_slope(a).to_f64()).abs();
        let compound = double_survivor_slope_compound(a).to_f64();
        Ok((
            e,
            format!(
                "sigma/N {:.4}, partition slope {}, compound {compound:.4}",
                r.survivor_empirical, r.survivor_slope
            ),
        ))
    })?;
    let detail = res
        .iter()
        .map(|(p, (_, d))| format!("{p}: {d}"))
        .collect::<Vec<_>>()
        .join("; ");
    let mut o = failures(
        res.into_iter()
            .map(|(p, (e, d))| (p, (e >= tol).then_some(d)))
            .collect(),
    );
    o.detail = detail;
    Ok(o)
}

fn double_interleaving(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let pts: Vec<u64> = span(spec, spec.a, "a")?.iter().collect();
    Ok(failures(grid(spec, &pts, a_label, |&a| {
        let r = check_interleaving_conjecture(&run_double(&ground(a, 0)?, n + 1)?, n as usize);
        Ok(if !r.interleaving_holds() {
            Some(format!(
                "interleaving fails at n = {}",
                r.interleaving_failures[0]
            ))
        } else if !r.gaps_hold() {
            Some(format!(
                "pointer gaps {:?}, survivor gaps {:?}",
                r.pointer_gaps, r.survivor_gaps
            ))
        } else {
            None
        })
    })?))
}

// ---- squares ----

const MU_PREFIX: [u64; 18] = [
    2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17, 19, 20, 21,
];
const LAMBDA_PREFIX: [u64; 15] = [
    1, 10, 18, 28, 40, 54, 70, 88, 129, 153, 179, 207, 237, 269, 303,
];

fn squares_prefixes(_: &CheckSpec) -> Result<Outcome> {
    let t = run_squares(30)?;
    let f = prefix_mismatch("mu", &t.mu, &MU_PREFIX)
        .or_else(|| prefix_mismatch("lambda", &t.lambda, &LAMBDA_PREFIX));
    Ok(failures(vec![("squares".into(), f)]))
}

fn squares_rank_identity(spec: &CheckSpec) -> Result<Outcome> {
    let t = run_squares(n_of(spec)?)?;
    let mut o = residuals(vec![("squares".into(), check_squares_rank(&t))]);
    o.points = t.lambda.len();
    Ok(o)
}

fn squares_nested_identity(spec: &CheckSpec) -> Result<Outcome> {
    let t = run_squares_with(n_of(spec)?, len_of(spec)?)?;
    let r = check_nested_identity(&t);
    let mut o = residuals(vec![("squares".into(), r.max_residual)]);
    if r.checked == 0 {
        o.passed = false;
        o.first_failure = Some("no index inside the computed range".into());
    }
    o.points = r.checked;
    o.detail = format!(
        "{} indices checked, {} past the computed range",
        r.checked, r.skipped
    );
    Ok(o)
}

fn squares_meta_hiccup(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let t = run_squares(n)?;
    let f = check_meta_hiccup(&t, n).map(|k| {
        format!(
            "gap {} at n = {k}",
            t.mu[k as usize - 1] - t.mu[k as usize - 2]
        )
    });
    let mut o = failures(vec![("squares".into(), f)]);
    o.points = n as usize;
    Ok(o)
}

fn squares_counting(spec: &CheckSpec) -> Result<Outcome> {
    let t = run_squares(n_of(spec)?)?;
    let f = counting_identity_failures(&t)
        .into_iter()
        .find(|&n| n >= 4)
        .map(|n| format!("identity fails at n = {n}"))
        .or_else(|| {
            check_counting_consistency(&t).map(|x| format!("S + D differs from x at x = {x}"))
        });
    Ok(failures(vec![("squares".into(), f)]))
}

fn squares_counting_small(spec: &CheckSpec) -> Result<Outcome> {
    let t = run_squares(n_of(spec)?)?;
    let small: Vec<u64> = counting_identity_failures(&t)
        .into_iter()
        .filter(|&n| n < 4)
        .collect();
    let f = (!small.is_empty()).then(|| format!("identity fails at n in {small:?}"));
    Ok(failures(vec![("squares".into(), f)]))
}

fn squares_tower(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let r = check_tower_residuals(&run_squares(n)?, n);
    let mut o = failures(vec![(
        "squares".into(),
        r.first_outside
            .map(|k| format!("residual outside {{0,1}} at n = {k}")),
    )]);
    o.points = r.histogram.values().sum();
    o.detail = format!("residual histogram {:?}", r.histogram);
    Ok(o)
}

// ---- extraction and hiccups ----

fn extraction_silver_examples(_: &CheckSpec) -> Result<Outcome> {
    let steps = extraction_trace(1, 3, 2, &GroundSequence::Naturals, 12)?;
    let s: Vec<u64> = steps.iter().map(|s| s.survivor).collect();
    let member: Vec<bool> = steps.iter().take(4).map(|s| s.member).collect();
    let consumed: Vec<u64> = steps.iter().take(4).map(|s| s.consumed).collect();
    let mut rows = vec![(
        "N".to_string(),
        prefix_mismatch("s", &s, &[1, 4, 6, 8, 11, 13, 16, 18, 21, 23, 25, 28])
            .or_else(|| {
                (member != [true, false, false, true])
                    .then(|| format!("membership column {member:?}"))
            })
            .or_else(|| prefix_mismatch("consumed", &consumed, &[3, 2, 2, 3])),
    )];
    let two = extraction_run(1, 3, 2, &GroundSequence::arith(2, 0)?, 7)?;
    rows.push((
        "2N".into(),
        prefix_mismatch("s", &two, &[2, 6, 12, 16, 20, 24, 30]),
    ));
    let three = extraction_run(1, 3, 2, &GroundSequence::arith(3, 1)?, 6)?;
    rows.push((
        "3N+1".into(),
        prefix_mismatch("s", &three, &[4, 10, 16, 22, 31, 37]),
    ));
    Ok(failures(rows))
}

/// `(a, b, j, y, z)`.
type ExtractionPoint = (u64, u64, u64, u64, u64);

fn extraction_points(spec: &CheckSpec) -> Result<Vec<ExtractionPoint>> {
    let (j, y, z) = (
        span(spec, spec.j, "j")?,
        span(spec, spec.y, "y")?,
        span(spec, spec.z, "z")?,
    );
    let ab = ab_points(spec, 0)?;
    let mut pts = Vec::new();
    for j in j.iter() {
        for y in y.iter() {
            for z in z.iter().filter(|&z| z != y) {
                pts.extend(ab.iter().map(|&(a, b)| (j, y, z, a, b)));
            }
        }
    }
    Ok(pts)
}

fn extraction_affine_equivalence(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)? as usize;
    let pts = extraction_points(spec)?;
    Ok(failures(grid(
        spec,
        &pts,
        ext_label,
        |&(j, y, z, a, b)| {
            Ok(check_extraction_equiv(j, y, z, a, b, n)?.map(|i| format!("differs at n = {i}")))
        },
    )?))
}

fn extraction_half_line(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)? as usize;
    let pts = extraction_points(spec)?;
    Ok(failures(grid(
        spec,
        &pts,
        ext_label,
        |&(j, y, z, a, b)| {
            Ok(check_half_line(j, y, z, a, b, n)?.map(|i| format!("queue minimum off at n = {i}")))
        },
    )?))
}

fn extraction_literal_agreement(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)? as usize;
    let pts = extraction_points(spec)?;
    Ok(failures(grid(
        spec,
        &pts,
        ext_label,
        |&(j, y, z, a, b)| {
            let g = ground(a, b)?;
            Ok(prefix_mismatch(
                "s",
                &extraction_run_literal(j, y, z, &g, n)?,
                &extraction_run(j, y, z, &g, n)?,
            ))
        },
    )?))
}

fn beatty_family(
    spec: &CheckSpec,
    make: fn(u64) -> Result<(HiccupParams, BeattyForm)>,
) -> Result<Outcome> {
    let n = n_of(spec)? as usize;
    let pts: Vec<u64> = span(spec, spec.k, "k")?.iter().collect();
    Ok(failures(grid(spec, &pts, k_label, |&k| {
        let (p, form) = make(k)?;
        Ok(first_beatty_miss(&hiccup_generate(&p, n), &form))
    })?))
}

fn hiccup_metallic(spec: &CheckSpec) -> Result<Outcome> {
    beatty_family(spec, |k| {
        let s = metallic_slopes(k);
        Ok((
            HiccupParams::new(1, 1, k + 1, k)?,
            BeattyForm::new(s.m, s.beta, 1),
        ))
    })
}

fn hiccup_reverse_metallic(spec: &CheckSpec) -> Result<Outcome> {
    beatty_family(spec, |k| {
        let s = metallic_slopes(k);
        Ok((
            HiccupParams::new(1, 1, k, k + 1)?,
            BeattyForm::new(s.r, s.beta_r, 1),
        ))
    })
}

fn hiccup_shift_zero_large(spec: &CheckSpec) -> Result<Outcome> {
    beatty_family(spec, |k| {
        let s = metallic_slopes(k);
        Ok((
            HiccupParams::new(0, 1, k + 1, k)?,
            BeattyForm::new(s.m, s.beta_j0_a, 1),
        ))
    })
}

fn hiccup_shift_zero_small(spec: &CheckSpec) -> Result<Outcome> {
    beatty_family(spec, |k| {
        let s = metallic_slopes(k);
        Ok((
            HiccupParams::new(0, 1, k, k + 1)?,
            BeattyForm::new(s.r, s.beta_j0_b, 2),
        ))
    })
}

/// `(j, y, z)`, its Beatty form and the fixture it should match.
type NamedRow = ((u64, u64, u64), BeattyForm, Option<&'static str>);

fn named_rows() -> Vec<NamedRow> {
    let phi = phi();
    let phi2 = &phi * &phi;
    let silver = QuadSurd::from_parts(1, 1, 2, 1);
    let one = QuadSurd::integer(1);
    vec![
        (
            (1, 2, 1),
            BeattyForm::new(phi.clone(), QuadSurd::integer(0), 1),
            Some("A000201"),
        ),
        (
            (1, 3, 2),
            BeattyForm::new(silver.clone(), -(&silver / &(&silver + &one)), 1),
            Some("A086377"),
        ),
        (
            (0, 3, 2),
            BeattyForm::new(
                silver.clone(),
                &(&one - &(&silver * 2)) / &(&silver + &one),
                1,
            ),
            None,
        ),
        (
            (1, 2, 3),
            BeattyForm::new(phi2.clone(), -phi.clone(), 1),
            None,
        ),
        (
            (0, 2, 3),
            BeattyForm::new(phi2, -phi.recip().expect("phi is nonzero"), 2),
            Some("A007066"),
        ),
    ]
}

fn hiccup_named_rows(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)? as usize;
    let rows = named_rows();
    let mut out = Vec::new();
    for ((j, y, z), form, id) in rows {
        let seq = hiccup_generate(&HiccupParams::new(j, 1, y, z)?, n);
        let mut f = first_beatty_miss(&seq, &form);
        if let (None, Some(id)) = (&f, id) {
            let b = fixture(id)?;
            let c = compare(&seq, &b, b.entries.first().map_or(1, |e| e.0));
            if !c.matches() || c.match_length != b.len() {
                f = Some(format!(
                    "{id}: matched {} of {} terms",
                    c.match_length,
                    b.len()
                ));
            }
        }
        out.push((format!("({j}, 1, {y}, {z})"), f));
    }
    Ok(failures(out))
}

// ---- continued fractions ----

fn cf_families(spec: &CheckSpec) -> Result<Outcome> {
    let a = span(spec, spec.a, "a")?;
    let r = check_cf_families(a.1, 0)?;
    let checks: Vec<_> = r
        .checks
        .into_iter()
        .filter(|c| c.family == "gamma-one" || c.param >= a.0)
        .collect();
    Ok(failures(
        checks
            .into_iter()
            .map(|c| {
                (
                    format!("{} a = {}", c.family, c.param),
                    (!c.ok).then_some(c.detail),
                )
            })
            .collect(),
    ))
}

fn cf_powers_of_two(spec: &CheckSpec) -> Result<Outcome> {
    let k = span(spec, spec.k, "k")?;
    let k_hi = u32::try_from(k.1).map_err(|_| Error::Precondition("k out of range".into()))?;
    let r = check_cf_families(0, k_hi)?;
    Ok(failures(
        r.checks
            .into_iter()
            .filter(|c| c.family == "powers-of-two" && c.param >= 1 << k.0)
            .map(|c| (format!("a = {}", c.param), (!c.ok).then_some(c.detail)))
            .collect(),
    ))
}

fn cf_named_expansions(_: &CheckSpec) -> Result<Outcome> {
    let g4 = cf_expand(&slope_gamma(4), DEFAULT_CF_STEPS)?.to_string();
    let g12 = cf_expand(&slope_gamma(12), DEFAULT_CF_STEPS)?;
    Ok(failures(vec![
        ("a = 4".into(), (g4 != "[2; (4,1,9,1,4,2,2)]").then_some(g4)),
        (
            "a = 12".into(),
            (g12.period.len() != 36).then(|| format!("period {}", g12.period.len())),
        ),
    ]))
}

// ---- rank transform ----

fn rank_equivalence(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)? as usize;
    let pts = ab_points(spec, 1)?;
    Ok(failures(grid(spec, &pts, ab_label, |&(a, b)| {
        Ok(check_equivalence(a, b, n)?
            .map(|m| format!("{}({}) = {}, sieve {}", m.which, m.n, m.transform, m.sieve)))
    })?))
}

fn rank_closed_forms(spec: &CheckSpec) -> Result<Outcome> {
    let n = n_of(spec)?;
    let iters = 4 * n as usize + 16;
    let naturals: Vec<u64> = (1..=n).collect();
    let wythoff = (1..=n)
        .map(|k| (&phi() * k as i64).to_i64_floor().map(|v| v as u64))
        .collect::<Result<Vec<_>>>()?;
    let odds: Vec<u64> = (1..=n).map(|k| 2 * k - 1).collect();
    let ones = fixed_point(&|_: u64| 1u64, n as usize, iters);
    let ident = fixed_point(&|k: u64| k, n as usize, iters);
    let odd = fixed_point(&|k: u64| 2 * k - 1, n as usize, iters);
    Ok(failures(vec![
        ("all-ones".into(), prefix_mismatch("r", &ones.r, &naturals)),
        ("identity".into(), prefix_mismatch("r", &ident.r, &wythoff)),
        ("odds".into(), prefix_mismatch("r", &odd.r, &odds)),
    ]))
}

// ---- OEIS fixtures ----

fn fixture_outcome(report_only: bool) -> Result<Outcome> {
    let rows = check_fixtures()?;
    Ok(failures(
        rows.into_iter()
            .filter(|c| c.report_only == report_only)
            .map(|c| {
                let f = (!c.passed()).then(|| match c.comparison.mismatch {
                    Some(m) => format!(
                        "index {}: expected {}, got {}",
                        m.index, m.expected, m.actual
                    ),
                    None => format!(
                        "matched {} of {}",
                        c.comparison.match_length, c.expected_length
                    ),
                });
                (c.id.to_string(), f)
            })
            .collect(),
    ))
}

fn oeis_fixtures(_: &CheckSpec) -> Result<Outcome> {
    fixture_outcome(false)
}

fn oeis_fraenkel(_: &CheckSpec) -> Result<Outcome> {
    fixture_outcome(true)
}
