//! Artin presentations of framed block-twist braids.
//!
//! Each chord `j` gets `r_j = prod_B (x_a ... x_b)^{e_B} · x_j^{m_j - sum e_B}`,
//! with `B = [a, b]` running over the blocks containing `j`, outermost first.

use crate::artin::ArtinPresentation;
use crate::error::{Error, Result};
use crate::freegroup::{Letter, Word, DEFAULT_MAX_WORD_LEN};
use crate::twist::{FramedTwistTree, NegativeMode};

/// `m_j - sum of e_B over blocks B containing chord j`.
pub fn positivity_slack(ft: &FramedTwistTree) -> Result<Vec<i64>> {
    ft.tree.validate(NegativeMode::Lax)?;
    (1..=ft.n() as u32)
        .map(|j| {
            let s = slack_wide(ft, j);
            i64::try_from(s).map_err(|_| Error::Unsupported(format!("slack of chord {j} overflows i64")))
        })
        .collect()
}

fn slack_wide(ft: &FramedTwistTree, j: u32) -> i128 {
    let total: i128 = ft.tree.chain(j).iter().map(|b| b.exponent as i128).sum();
    ft.framing[j as usize - 1] as i128 - total
}

/// Length of the longest relator before cancellation.
pub fn tree_length_bound(ft: &FramedTwistTree) -> u128 {
    (1..=ft.n() as u32)
        .map(|j| {
            let blocks: u128 = ft
                .tree
                .chain(j)
                .iter()
                .map(|b| b.width() as u128 * b.exponent.unsigned_abs() as u128)
                .sum();
            blocks + slack_wide(ft, j).unsigned_abs()
        })
        .max()
        .unwrap_or(0)
}

pub fn relators_from_tree(ft: &FramedTwistTree) -> Result<ArtinPresentation> {
    relators_from_tree_with_limit(ft, DEFAULT_MAX_WORD_LEN)
}

/// As [`relators_from_tree`], refusing relators longer than `max_len` letters.
pub fn relators_from_tree_with_limit(ft: &FramedTwistTree, max_len: usize) -> Result<ArtinPresentation> {
    ft.tree.validate(NegativeMode::Lax)?;
    check_limit(tree_length_bound(ft), max_len)?;
    let n = ft.n();
    let relators = (1..=n as u32)
        .map(|j| {
            let mut raw = Vec::new();
            for b in ft.tree.chain(j) {
                push_power(&mut raw, &interval(b.start, b.end), b.exponent as i128);
            }
            push_power(&mut raw, &[Letter::pos(j)], slack_wide(ft, j));
            Word::reduce(raw, n)
        })
        .collect::<Result<Vec<_>>>()?;
    ArtinPresentation::new(relators)
}

/// Relators of the three-box braid `σ1^(2e1) σ2^(2f1) (σ2σ1σ2)^(2e)` with
/// framing `m`, written with `c = x1 (x2x3)^f1 x2 (x2x3)^-f1`:
///
/// ```text
/// r1 = (x1x2x3)^e c^e1 x1^(m1-e-e1)
/// r2 = (x1x2x3)^e (x2x3)^f1 c^e1 x2^(m2-e-e1-f1)
/// r3 = (x1x2x3)^e (x2x3)^f1 x3^(m3-e-f1)
/// ```
///
/// These satisfy the Artin condition only when `e1 = 0` or `f1 = 0`.
pub fn relators_small3(e: i64, e1: i64, f1: i64, m: [i64; 3]) -> Result<ArtinPresentation> {
    relators_small3_with_limit(e, e1, f1, m, DEFAULT_MAX_WORD_LEN)
}

pub fn relators_small3_with_limit(e: i64, e1: i64, f1: i64, m: [i64; 3], max_len: usize) -> Result<ArtinPresentation> {
    let (e, e1, f1) = (e as i128, e1 as i128, f1 as i128);
    let [m1, m2, m3] = m.map(|v| v as i128);
    let slacks = [m1 - e - e1, m2 - e - e1 - f1, m3 - e - f1];
    let c_len = 2 + 4 * f1.unsigned_abs();
    let bound = 3 * e.unsigned_abs()
        + 2 * f1.unsigned_abs()
        + c_len * e1.unsigned_abs()
        + slacks.iter().map(|s| s.unsigned_abs()).max().unwrap_or(0);
    check_limit(bound, max_len)?;

    let all = interval(1, 3);
    let tail = interval(2, 3);
    let mut c = vec![Letter::pos(1)];
    push_power(&mut c, &tail, f1);
    c.push(Letter::pos(2));
    push_power(&mut c, &tail, -f1);

    let mut r1 = Vec::new();
    push_power(&mut r1, &all, e);
    push_power(&mut r1, &c, e1);
    push_power(&mut r1, &[Letter::pos(1)], slacks[0]);

    let mut r2 = Vec::new();
    push_power(&mut r2, &all, e);
    push_power(&mut r2, &tail, f1);
    push_power(&mut r2, &c, e1);
    push_power(&mut r2, &[Letter::pos(2)], slacks[1]);

    let mut r3 = Vec::new();
    push_power(&mut r3, &all, e);
    push_power(&mut r3, &tail, f1);
    push_power(&mut r3, &[Letter::pos(3)], slacks[2]);

    ArtinPresentation::new(vec![Word::reduce(r1, 3)?, Word::reduce(r2, 3)?, Word::reduce(r3, 3)?])
}

fn check_limit(bound: u128, max_len: usize) -> Result<()> {
    if bound > max_len as u128 {
        return Err(Error::ResourceLimit {
            what: "relator length",
            limit: max_len,
            requested: usize::try_from(bound).unwrap_or(usize::MAX),
        });
    }
    Ok(())
}

fn interval(start: u32, end: u32) -> Vec<Letter> {
    (start..=end).map(Letter::pos).collect()
}

fn push_power(raw: &mut Vec<Letter>, base: &[Letter], k: i128) {
    for _ in 0..k.unsigned_abs() {
        if k > 0 {
            raw.extend_from_slice(base);
        } else {
            raw.extend(base.iter().rev().map(|l| l.inverse()));
        }
    }
}
