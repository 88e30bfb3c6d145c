use std::fmt;

use serde::Serialize;

use crate::config_space::{AnnulusPoint, Configuration, Tolerances};
use crate::error::{PlanError, Result};

/// Chains of merged angles longer than this many `tau_angle` are rejected.
const MAX_CHAIN_FACTOR: f64 = 10.0;

/// Grouping of a list of angles into fibers.
#[derive(Debug, Clone)]
pub(crate) struct AngleGroups {
    /// Representative angle of each group, sorted increasingly.
    pub reps: Vec<f64>,
    /// Group index of each input angle.
    pub member: Vec<usize>,
}

/// Groups angles (in turns) that are circularly closer than `tau`.
pub(crate) fn group_angles(thetas: &[f64], tau: f64) -> Result<AngleGroups> {
    let n = thetas.len();
    if n == 0 {
        return Ok(AngleGroups {
            reps: Vec::new(),
            member: Vec::new(),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| thetas[a].total_cmp(&thetas[b]));
    // gap[j] is the gap from order[j-1] to order[j], cyclically
    let gap = |j: usize| -> f64 {
        let cur = thetas[order[j]];
        if j == 0 {
            cur + 1.0 - thetas[order[n - 1]]
        } else {
            cur - thetas[order[j - 1]]
        }
    };
    let first = (0..n)
        .find(|&j| gap(j) >= tau)
        .ok_or(PlanError::AmbiguousGrouping { span: 1.0 })?;

    let mut groups: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut span = 0.0;
    for step in 0..n {
        let j = (first + step) % n;
        if step == 0 || gap(j) >= tau {
            groups.push((thetas[order[j]], vec![order[j]]));
            span = 0.0;
        } else {
            span += gap(j);
            if span > MAX_CHAIN_FACTOR * tau {
                return Err(PlanError::AmbiguousGrouping { span });
            }
            groups.last_mut().unwrap().1.push(order[j]);
        }
    }
    groups.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut member = vec![0; n];
    for (g, (_, idxs)) in groups.iter().enumerate() {
        for &i in idxs {
            member[i] = g;
        }
    }
    Ok(AngleGroups {
        reps: groups.into_iter().map(|(r, _)| r).collect(),
        member,
    })
}

/// The distinct angles occupied by `c`, with multiplicities forgotten.
pub fn angular_support(c: &Configuration<AnnulusPoint>, tol: &Tolerances) -> Result<Vec<f64>> {
    let thetas: Vec<f64> = c.points().iter().map(|p| p.theta()).collect();
    Ok(group_angles(&thetas, tol.tau_angle)?.reps)
}

/// Number of distinct angles occupied by the union of `x` and `y`.
pub fn degree(x: &Configuration<AnnulusPoint>, y: &Configuration<AnnulusPoint>, tol: &Tolerances) -> Result<usize> {
    Ok(fiber_decomposition(x, y, tol)?.degree())
}

/// Per-fiber point counts of a pair of annulus configurations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiberDecomposition {
    /// The occupied angles `q_1 < … < q_k`.
    pub angles: Vec<f64>,
    pub nx: Vec<usize>,
    pub ny: Vec<usize>,
    /// `nx[i] - ny[i]`.
    pub delta: Vec<i64>,
}

impl FiberDecomposition {
    pub fn degree(&self) -> usize {
        self.angles.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.delta.iter().all(|&d| d == 0)
    }
}

/// Fiber membership of each point of a pair, alongside the counts.
pub(crate) struct Fibers {
    pub decomposition: FiberDecomposition,
    pub x_fiber: Vec<usize>,
    pub y_fiber: Vec<usize>,
}

pub(crate) fn decompose(x: &[AnnulusPoint], y: &[AnnulusPoint], tol: &Tolerances) -> Result<Fibers> {
    if x.len() != y.len() {
        return Err(PlanError::SizeMismatch(x.len(), y.len()));
    }
    let thetas: Vec<f64> = x.iter().chain(y).map(|p| p.theta()).collect();
    let groups = group_angles(&thetas, tol.tau_angle)?;
    let k = groups.reps.len();
    let (x_fiber, y_fiber) = groups.member.split_at(x.len());
    let mut nx = vec![0; k];
    let mut ny = vec![0; k];
    for &g in x_fiber {
        nx[g] += 1;
    }
    for &g in y_fiber {
        ny[g] += 1;
    }
    let delta = nx.iter().zip(&ny).map(|(&a, &b)| a as i64 - b as i64).collect();
    Ok(Fibers {
        decomposition: FiberDecomposition {
            angles: groups.reps,
            nx,
            ny,
            delta,
        },
        x_fiber: x_fiber.to_vec(),
        y_fiber: y_fiber.to_vec(),
    })
}

pub fn fiber_decomposition(
    x: &Configuration<AnnulusPoint>,
    y: &Configuration<AnnulusPoint>,
    tol: &Tolerances,
) -> Result<FiberDecomposition> {
    Ok(decompose(x.points(), y.points(), tol)?.decomposition)
}

/// Stratum of a pair: its degree and the count-difference vector up to
/// cyclic rotation of the fibers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AnnulusStratum {
    pub degree: usize,
    pub psi_class: Vec<i64>,
}

impl fmt::Display for AnnulusStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.psi_class.iter().map(i64::to_string).collect();
        write!(f, "L{}[{}]", self.degree, parts.join(","))
    }
}

/// Canonical representative of the rotation class of `delta`: its
/// lexicographically smallest cyclic rotation.
pub fn min_rotation(delta: &[i64]) -> Vec<i64> {
    let k = delta.len();
    (0..k.max(1))
        .map(|r| delta.iter().cycle().skip(r).take(k).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn psi_class(fd: &FiberDecomposition) -> AnnulusStratum {
    AnnulusStratum {
        degree: fd.degree(),
        psi_class: min_rotation(&fd.delta),
    }
}
