//! Reading braids off sampled motions in the plane.
//!
//! Strands are ordered by their projection onto a fixed generic direction.
//! When two adjacent strands exchange places, the generator is positive if
//! the strand coming from the left passes below the other one, matching the
//! counter-clockwise half-twist.

use num_complex::Complex64;

use crate::braid::BraidWord;
use crate::config_space::AnnulusPoint;
use crate::error::HarnessError;

/// Projection direction; any angle not aligned with the motion works.
const VIEW: f64 = 0.3;

/// Embeds the annulus in the punctured plane, angle to angle, with the
/// height increasing outwards.
pub fn annulus_to_plane(p: &AnnulusPoint) -> Complex64 {
    Complex64::from_polar((p.height() / 8.0).exp(), std::f64::consts::TAU * p.theta())
}

fn view(z: Complex64) -> Complex64 {
    z * Complex64::from_polar(1.0, -VIEW)
}

/// Braid word of the motion `f` on `[0, 1]`, sampled at `samples` uniform
/// times; each exchange is located by bisection on `f` itself.
pub fn braid_of_motion<F>(f: F, samples: usize) -> Result<BraidWord, HarnessError>
where
    F: Fn(f64) -> Vec<Complex64>,
{
    let first: Vec<Complex64> = f(0.0).into_iter().map(view).collect();
    let n = first.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| first[a].re.total_cmp(&first[b].re));
    let mut letters = Vec::new();
    let samples = samples.max(2);
    let mut prev = first;
    let mut t_prev = 0.0;
    for k in 1..samples {
        let t = k as f64 / (samples - 1) as f64;
        let cur: Vec<Complex64> = f(t).into_iter().map(view).collect();
        let mut events = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let before = prev[a].re < prev[b].re;
                if before != (cur[a].re < cur[b].re) {
                    let (tc, za, zb) = bisect(&f, a, b, t_prev, t, before);
                    events.push((tc, a, b, za, zb));
                }
            }
        }
        events.sort_by(|p, q| p.0.total_cmp(&q.0));
        for (_, a, b, za, zb) in events {
            let (pa, pb) = (pos(&order, a), pos(&order, b));
            if pa.abs_diff(pb) != 1 {
                return Err(HarnessError::NonSimpleCrossing(a + 1, b + 1));
            }
            let (left, left_z, right_z) = if pa < pb { (pa, za, zb) } else { (pb, zb, za) };
            let sign = if left_z.im < right_z.im { 1 } else { -1 };
            letters.push(sign * (left as i32 + 1));
            order.swap(pa, pb);
        }
        prev = cur;
        t_prev = t;
    }
    Ok(BraidWord::new(n, letters)?)
}

fn pos(order: &[usize], track: usize) -> usize {
    order.iter().position(|&s| s == track).expect("track in order")
}

/// Locates the time in `[lo, hi]` where tracks `a` and `b` exchange their
/// projected order and returns it with both positions there.
fn bisect<F>(f: &F, a: usize, b: usize, mut lo: f64, mut hi: f64, initial: bool) -> (f64, Complex64, Complex64)
where
    F: Fn(f64) -> Vec<Complex64>,
{
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let z = f(mid);
        if (view(z[a]).re < view(z[b]).re) == initial {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    let z = f(t);
    (t, view(z[a]), view(z[b]))
}

/// Total turning of `z_a − z_b` over `[0, 1]`, in full turns.
pub fn winding_number<F>(f: F, a: usize, b: usize, samples: usize) -> f64
where
    F: Fn(f64) -> Vec<Complex64>,
{
    let samples = samples.max(2);
    let diff = |t: f64| {
        let z = f(t);
        z[a] - z[b]
    };
    let mut prev = diff(0.0);
    let mut total = 0.0;
    for k in 1..samples {
        let cur = diff(k as f64 / (samples - 1) as f64);
        total += (cur / prev).arg();
        prev = cur;
    }
    total / std::f64::consts::TAU
}
