use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::catalog::BoundId;
use super::input::BoundInput;
use super::params::{BoundParams, ResolvedParams};
use super::report::{BoundReport, Verdict};
use crate::error::{Error, Result};
use crate::graph::Family;
use crate::indices::{albertson, albertson_monogenic, sigma, zagreb_m1};
use crate::rational::{int, pow2, uint, Interval, Q};

/// Fractional bits for root enclosures on the first attempt.
pub const ROOT_BITS: u32 = 64;
/// Fractional bits after the single escalation.
pub const ESCALATED_BITS: u32 = 256;

#[derive(Default)]
struct Draft {
    failed: Vec<String>,
    sides: Option<(Interval, Interval)>,
    notes: Vec<String>,
}

impl Draft {
    fn fail(&mut self, reason: impl Into<String>) {
        self.failed.push(reason.into());
    }

    fn set(&mut self, lhs: Q, rhs: Q) {
        self.sides = Some((Interval::exact(lhs), Interval::exact(rhs)));
    }
}

fn q(x: u64) -> Q {
    uint(x)
}

fn qi(x: i128) -> Q {
    Q::from_integer(BigInt::from(x))
}

fn uses_roots(id: BoundId) -> bool {
    matches!(id, BoundId::B6 | BoundId::B15b)
}

fn needs_tree(id: BoundId) -> bool {
    !matches!(
        id,
        BoundId::B14 | BoundId::B15a | BoundId::B15b | BoundId::B16
    )
}

/// Evaluate one claim. Hypotheses are checked first; a hypothesis whose
/// failure would divide by zero leaves both sides unset and the verdict
/// `undefined`. Missing quantities are reported as
/// [`Error::MissingInput`].
pub fn evaluate_bound(
    id: BoundId,
    input: &BoundInput,
    params: &BoundParams,
) -> Result<BoundReport> {
    params.validate()?;
    let resolved = ResolvedParams::resolve(params, input.n, input.m, input.max_degree);
    let relation = id.spec().relation;

    let mut draft = evaluate_sides(id, input, &resolved, ROOT_BITS)?;
    let mut verdict = decide(relation, &draft);
    if verdict == Verdict::Indeterminate && uses_roots(id) {
        draft = evaluate_sides(id, input, &resolved, ESCALATED_BITS)?;
        draft.notes.push(format!(
            "root enclosures escalated to {ESCALATED_BITS} fractional bits"
        ));
        verdict = decide(relation, &draft);
    }
    if needs_tree(id) && !input.is_tree {
        draft.failed.insert(0, "input is not a tree".into());
    }

    let margin = draft
        .sides
        .as_ref()
        .map(|(lhs, rhs)| relation.margin(lhs, rhs));
    let (lhs, rhs) = match draft.sides {
        Some((l, r)) => (Some(l), Some(r)),
        None => (None, None),
    };
    let mut notes = input.notes.clone();
    notes.extend(draft.notes);
    Ok(BoundReport {
        bound_id: id,
        input: input.label.clone(),
        hypotheses_met: draft.failed.is_empty(),
        failed_hypotheses: draft.failed,
        lhs,
        rhs,
        relation,
        verdict,
        margin,
        params: resolved.to_string(),
        notes,
    })
}

fn decide(relation: super::report::Relation, draft: &Draft) -> Verdict {
    match &draft.sides {
        Some((lhs, rhs)) => relation.decide(&relation.margin(lhs, rhs)),
        None => Verdict::Undefined,
    }
}

/// Every catalogue entry whose inputs are present, in catalogue order.
pub fn evaluate_all(input: &BoundInput, params: &BoundParams) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for id in BoundId::ALL {
        match evaluate_bound(id, input, params) {
            Ok(r) => out.push(r),
            Err(Error::MissingInput { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn evaluate_sides(id: BoundId, input: &BoundInput, p: &ResolvedParams, bits: u32) -> Result<Draft> {
    let mut d = Draft::default();
    let n = q(input.n);
    let delta = q(input.max_degree);
    let lambda = input.mean.clone();
    let cubes = q(input.cube_sum);
    let delta_term = &delta * (&delta - int(1)) * (&delta - int(1));

    match id {
        BoundId::B1a | BoundId::B1b => {
            let irr = q(input.need_irr()?);
            if input.max_degree < 2 {
                d.fail("D >= 2 fails: D(D-1)^2 vanishes");
            } else {
                let ratio = int(2) * irr / &delta_term;
                let rhs = if id == BoundId::B1a { int(0) } else { int(1) };
                d.set(ratio, rhs);
            }
            d.notes.push("irr_min read as the instance's irr".into());
        }
        BoundId::B2a | BoundId::B2b => {
            let irr = q(input.need_irr()?);
            let m = input.need_m()?;
            let last = input.last_entry();
            if id == BoundId::B2a && last > 20 {
                d.fail(format!("d_n <= 20 fails (d_n = {last})"));
            }
            if id == BoundId::B2b && last <= 3 {
                d.fail(format!("d_n > 3 fails (d_n = {last})"));
            }
            if m == 0 {
                d.fail("m > 0 fails: 2n/m undefined");
            } else {
                let m = q(m);
                let up = (int(2) * &n / &m).ceil();
                let rhs = if id == BoundId::B2a {
                    (int(2) * &m / &n).floor() + up + pow2(p.alpha as i64)
                } else {
                    up + pow2(p.beta as i64)
                };
                d.set(irr, rhs);
            }
            d.notes.push("irr_max read as the instance's irr".into());
        }
        BoundId::B3 | BoundId::B4 => {
            let s = q(input.need_sigma()?);
            let irr = q(input.need_irr()?);
            let ds = input.need_derived()?;
            let denom = ds.a_last() - ds.t_last();
            if denom.is_zero() {
                d.fail("a_r != t_m fails");
            } else {
                let spread = ds.max_half_sum() - ds.max_half_difference();
                let core = irr + ((&n - int(2)) / denom).floor() + &delta * &spread * &spread;
                let rhs = if id == BoundId::B4 {
                    core + cubes
                } else {
                    core
                };
                d.set(s, rhs);
            }
        }
        BoundId::B5 => {
            let s = q(input.need_sigma()?);
            let irr = q(input.need_irr()?);
            let m = q(input.need_m()?);
            let ds = input.need_derived()?;
            let span = ds.a_last() - ds.a_first();
            if span.is_zero() {
                d.fail("a_r != a_1 fails");
            } else {
                let x = ds.max_half_sum() * &span
                    + ds.max_half_difference() * (ds.t_last() - ds.t_first());
                if !(n <= x && x < irr) {
                    d.fail(format!(
                        "n <= D_A(a_r-a_1) + D_R(t_m-t_1) < irr fails (middle term = {})",
                        crate::rational::fraction_string(&x)
                    ));
                }
                let inner = (int(2) * &n / &span).floor() + (int(2) * &m / &n).ceil();
                let rhs = irr + inner / &n + int(4) * &n * &delta;
                d.set(s, rhs);
            }
        }
        BoundId::B6 => {
            let s = q(input.need_sigma()?);
            let m = q(input.need_m()?);
            let ds = input.need_derived()?;
            let lambda_a = ds.mean_half_sum();
            let lambda_r = ds.mean_half_difference();
            if lambda_a.is_zero() {
                d.fail("lambda_A != 0 fails");
            }
            if lambda_r.is_zero() {
                d.fail("lambda_R != 0 fails");
            }
            if !lambda_a.is_zero() && !lambda_r.is_zero() {
                let root = Interval::sqrt(&(&lambda * &cubes), bits);
                let gap = &n - &delta;
                let rest = gap.clone() * gap
                    - ((int(2) * &n / lambda_a).floor() + (int(2) * m / lambda_r).ceil());
                d.sides = Some((Interval::exact(s), root.add(&Interval::exact(rest))));
            }
        }
        BoundId::B7 => {
            let s = q(input.need_sigma()?);
            let irr = q(input.need_irr()?);
            let m = q(input.need_m()?);
            let t1 = ((int(3) * &n + int(1)) / int(2)).floor()
                + ((int(3) * m + int(1)) / int(2)).ceil()
                + ((int(3) * &delta + int(2) * &n) / int(4)).floor();
            d.notes.push(format!("T1 = {}", t1.numer()));
            let rhs = &lambda * &lambda * t1 / int(3) - cubes + irr;
            d.set(s, rhs);
        }
        BoundId::B8 => {
            let s = q(input.need_sigma()?);
            d.notes.push("lambda read as lambda_D".into());
            if lambda.is_zero() {
                d.fail("lambda_D != 0 fails");
            } else {
                let rhs = (&n * &n * &n + &n + delta_term) / (int(2) * lambda);
                d.set(s, rhs);
            }
        }
        BoundId::B9 => {
            let s = q(input.need_sigma()?);
            let irr = q(input.need_irr()?);
            let m = q(input.need_m()?);
            let rhs = pow2(p.p as i64) * (irr + int(2) * m) + delta_term;
            d.set(s, rhs);
        }
        BoundId::B10 => {
            let s = q(input.need_sigma()?);
            d.notes
                .push("sigma_max read as the instance's sigma".into());
            let dm = input.max_degree;
            if dm < 4 {
                d.fail(format!("D >= 4 fails (D = {dm})"));
            }
            if p.max_sigma_gating == super::params::MaxSigmaGating::Strict
                && !(dm >= 7 && 4 * (dm - 3) <= input.n)
            {
                d.fail("4 <= D-3 <= n/4 fails");
            }
            if dm != 3 {
                let sq = &n * &n;
                let rhs = (int(3) * &sq / int(4)).floor() * (sq / int(4)).ceil()
                    / (int(2) * (&delta - int(3)));
                d.set(s, rhs);
            }
        }
        BoundId::B11 => {
            let s = q(input.need_sigma()?);
            let m = q(input.need_m()?);
            let mut ok = true;
            if input.n == 1 {
                d.fail("n != 1 fails");
                ok = false;
            }
            if lambda.is_zero() {
                d.fail("lambda_D != 0 fails");
                ok = false;
            }
            let Some(eta) = p.eta else {
                d.fail("eta undefined (m = 0)");
                return Ok(d);
            };
            if ok {
                let gap = &m - &delta;
                let tail = pow2(eta) * &gap * &gap / (int(5) * num_traits::pow(&n - int(1), 3));
                let rhs = (int(2) * &n * &n / (int(3) * lambda)).floor() + tail;
                d.set(s, rhs);
            }
        }
        BoundId::B12 | BoundId::B13 => {
            let s = q(input.need_sigma()?);
            let Some(eta) = p.eta else {
                d.fail("eta undefined (m = 0)");
                return Ok(d);
            };
            let eta = qi(eta as i128);
            let n_eta = &n - &eta;
            let other = if id == BoundId::B12 {
                &n - &lambda
            } else {
                &eta - &lambda
            };
            if n_eta.is_zero() {
                d.fail("eta != n fails");
            }
            if other.is_zero() {
                d.fail(if id == BoundId::B12 {
                    "lambda_D != n fails"
                } else {
                    "eta != lambda_D fails"
                });
            }
            if !n_eta.is_zero() && !other.is_zero() {
                let steps = (&n / &n_eta).floor();
                let rhs = if id == BoundId::B12 {
                    int(4) * &n - int(2) * &eta * &lambda - &n_eta * &steps * &steps
                        + &n_eta * (&n / other).floor()
                } else {
                    if let Some(note) = &p.eta1_note {
                        d.notes.push(note.clone());
                    }
                    &p.eta1 * steps + &p.eta1 * (&n / other).ceil() + cubes
                };
                d.set(s, rhs);
            }
        }
        BoundId::B14 => {
            let g = input.need_graph()?;
            let gn = g.vertex_count() as i128;
            let gm = g.edge_count() as i128;
            let lhs = sigma(g) as i128 + sigma(&g.complement()) as i128;
            let rhs = gn * zagreb_m1(g) as i128 - 4 * gm * gm;
            d.set(qi(lhs), qi(rhs));
        }
        BoundId::B15a | BoundId::B15b => {
            let mut a = input.entries.clone();
            if a.windows(2).any(|w| w[0] < w[1]) {
                a.sort_unstable_by(|x, y| y.cmp(x));
                d.notes.push("entries rearranged non-increasing".into());
            }
            let k = a.len() as u64;
            let total: u64 = a.iter().sum();
            let (first, last) = (a[0], a[a.len() - 1]);
            if id == BoundId::B15a {
                let lhs = q(total) * (q(first) + q(last));
                let rhs = a.iter().fold(Q::zero(), |acc, &x| acc + q(x) * q(x))
                    + q(k) * q(first) * q(last);
                d.set(lhs, rhs);
            } else if first == last {
                // both sides vanish identically on a constant sequence
                d.set(Q::zero(), Q::zero());
            } else {
                let roots = a.iter().fold(Interval::exact(Q::zero()), |acc, &x| {
                    acc.add(&Interval::sqrt(&q(x), bits))
                });
                let lhs = Interval::exact(q(k) * q(total)).sub(&roots.square_nonneg());
                let product = a
                    .iter()
                    .fold(BigInt::one(), |acc, &x| acc * BigInt::from(x));
                let geo = Interval::nth_root(&product, k as u32, bits);
                let mean = q(total) / q(k);
                let rhs = Interval::exact(mean).sub(&geo).scale(&(q(k) * q(k - 1)));
                d.sides = Some((lhs, rhs));
            }
        }
        BoundId::B16 => {
            let g = input.need_graph()?;
            let order = g.vertex_count();
            if order < 3 {
                d.fail(format!("n >= 3 fails (n = {order})"));
            } else {
                // threshold graphs are determined by their degree multiset
                let reference = Family::Monogenic(order).build()?;
                if reference.degree_multiset() != g.degree_multiset() {
                    d.fail("graph is not the monogenic semigroup graph");
                }
                d.set(q(albertson(g)), q(albertson_monogenic(order as u64)?));
            }
        }
    }
    Ok(d)
}
