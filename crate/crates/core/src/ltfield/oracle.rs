//! Brute-force hypersums in `K_γ` by lifting cosets to polynomials.
//!
//! `x + y` is the set of leading-term classes `rv(x̂ + ŷ(1 + u))`, where `x̂`,
//! `ŷ` are the polynomial lifts given by the stored coefficients and `u`
//! runs over all polynomials with terms `t^(γ+1) … t^(γ+1+extra)`. This is
//! independent of the case analysis in [`LtContext::lt_add`]. Every class
//! produced lies in `x + y`, and a class of `x + y` is produced whenever its
//! value is at most [`exact_through`].

use std::collections::BTreeSet;

use crate::backend::contains;

use crate::ltfield::lt::{LtContext, LtElem};

/// Leading-term class of the Laurent polynomial `t^low · Σ f[i] t^i`.
fn rv(ctx: &LtContext, low: i64, f: &[u32]) -> LtElem {
    match f.iter().position(|&c| c != 0) {
        None => LtElem::Zero,
        Some(i) => {
            let mut coeffs = f[i..].to_vec();
            coeffs.resize(ctx.gamma() + 1, 0);
            LtElem::new(low + i as i64, coeffs)
        }
    }
}

/// Classes reachable as `rv(x̂ + ŷ(1 + u))` with `u` of degree at most
/// `γ + 1 + extra`.
pub fn lift_sum(ctx: &LtContext, x: &LtElem, y: &LtElem, extra: usize) -> BTreeSet<LtElem> {
    let gf = ctx.field();
    let g = ctx.gamma();
    let (LtElem::Nonzero { value: vx, coeffs: xs }, LtElem::Nonzero { value: vy, coeffs: ys }) = (x, y) else {
        return BTreeSet::from([if *x == LtElem::Zero { y.clone() } else { x.clone() }]);
    };
    let low = *vx.min(vy);
    let span = (vx - vy).unsigned_abs() as usize;
    let tail_len = extra + 1;
    // Room for x̂, ŷ·(1+u) and γ coefficients past the last term.
    let len = span + 2 * g + tail_len + 2 + g;
    let q = ctx.q() as u32;
    let mut out = BTreeSet::new();
    let mut u = vec![0u32; tail_len];
    loop {
        let mut f = vec![0u32; len];
        for (i, &c) in xs.iter().enumerate() {
            let k = (vx - low) as usize + i;
            f[k] = gf.add(f[k], c);
        }
        // ŷ·(1 + u), with u = Σ u[j] t^(γ+1+j).
        for (i, &c) in ys.iter().enumerate() {
            let k = (vy - low) as usize + i;
            f[k] = gf.add(f[k], c);
            for (j, &d) in u.iter().enumerate() {
                let k2 = k + g + 1 + j;
                f[k2] = gf.add(f[k2], gf.mul(c, d));
            }
        }
        out.insert(rv(ctx, low, &f));
        // Odometer over u.
        let mut i = 0;
        while i < u.len() {
            u[i] += 1;
            if u[i] < q {
                break;
            }
            u[i] = 0;
            i += 1;
        }
        if i == u.len() {
            break;
        }
    }
    out
}

/// Highest value up to which [`lift_sum`] with this `extra` finds every
/// class: the first `γ + 1` coefficients at value `V` only involve `u` up to
/// degree `V + γ - vy`.
pub fn exact_through(y: &LtElem, extra: usize) -> Option<i64> {
    y.value().map(|vy| vy + 1 + extra as i64)
}

/// Exact set equality of `lt_add` with [`lift_sum`], compared on every window
/// element whose value the oracle determines, plus every oracle class.
pub fn agrees(ctx: &LtContext, window: &[LtElem], x: &LtElem, y: &LtElem) -> bool {
    let extra = ctx.gamma() + 1;
    let oracle = lift_sum(ctx, x, y, extra);
    let s = ctx.lt_add(x, y);
    if !oracle.iter().all(|z| contains(ctx, &s, z)) {
        return false;
    }
    let limit = exact_through(y, extra);
    window.iter().all(|t| {
        let decided = match (t.value(), limit) {
            (Some(v), Some(l)) => v <= l,
            _ => true,
        };
        !decided || contains(ctx, &s, t) == oracle.contains(t)
    })
}
