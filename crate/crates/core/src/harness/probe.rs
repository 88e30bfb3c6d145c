//! Empirical continuity and partition checks.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::random::{annulus_pair, disc_pair, seeded};
use crate::annulus;
use crate::config_space::{
    bottleneck_distance, circle_diff, AnnulusPoint, Configuration, Motion, PathPlan, PlanePoint, Surface, Tolerances,
};
use crate::disc3::{self, is_collinear, orientation};
use crate::error::Result;

/// Outcome of a continuity probe. Trials whose perturbation left the
/// stratum are counted as escapes and excluded from the deviations.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ProbeReport {
    pub trials: usize,
    pub escapes: usize,
    pub deviations: Vec<f64>,
}

impl ProbeReport {
    pub fn accepted(&self) -> usize {
        self.deviations.len()
    }

    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().copied().fold(0.0, f64::max)
    }

    /// Fraction of accepted trials with deviation strictly below `bound`.
    pub fn fraction_below(&self, bound: f64) -> f64 {
        if self.deviations.is_empty() {
            return 1.0;
        }
        self.deviations.iter().filter(|&&d| d < bound).count() as f64 / self.deviations.len() as f64
    }

    pub fn merge(&mut self, other: ProbeReport) {
        self.trials += other.trials;
        self.escapes += other.escapes;
        self.deviations.extend(other.deviations);
    }
}

/// Largest bottleneck distance between two paths at `samples` common times.
pub fn path_deviation<M: Motion>(a: &PathPlan<M>, b: &PathPlan<M>, samples: usize) -> f64 {
    a.sample_tracks(samples)
        .into_iter()
        .map(|(t, pa)| {
            let pb = b.tracks_at(t).expect("sample time in range");
            bottleneck_distance(&pa, &pb)
        })
        .fold(0.0, f64::max)
}

/// Moves every fiber of the pair by a common random angle and every point
/// by a random height, all within `h`, so that fibers stay fibers.
pub fn perturb_annulus_pair<R: Rng + ?Sized>(
    rng: &mut R,
    x: &Configuration<AnnulusPoint>,
    y: &Configuration<AnnulusPoint>,
    h: f64,
    tol: &Tolerances,
) -> Result<(Configuration<AnnulusPoint>, Configuration<AnnulusPoint>)> {
    let fd = annulus::fiber_decomposition(x, y, tol)?;
    let shifts: Vec<f64> = fd.angles.iter().map(|_| rng.gen_range(-h..=h)).collect();
    let mut moved = |c: &Configuration<AnnulusPoint>| {
        let pts = c
            .points()
            .iter()
            .map(|p| {
                let fiber = (0..fd.angles.len())
                    .min_by(|&a, &b| {
                        circle_diff(fd.angles[a], p.theta())
                            .abs()
                            .total_cmp(&circle_diff(fd.angles[b], p.theta()).abs())
                    })
                    .expect("nonempty fibers");
                AnnulusPoint::new(p.theta() + shifts[fiber], p.height() + rng.gen_range(-h..=h))
            })
            .collect();
        Configuration::new(pts)
    };
    Ok((moved(x)?, moved(y)?))
}

/// Plans `(x, y)` and `trials` perturbations of it and records how far the
/// perturbed paths stray from the original one.
pub fn annulus_continuity_probe<R: Rng + ?Sized>(
    rng: &mut R,
    x: &Configuration<AnnulusPoint>,
    y: &Configuration<AnnulusPoint>,
    h: f64,
    trials: usize,
    tol: &Tolerances,
) -> Result<ProbeReport> {
    let base = annulus::plan(x, y, tol)?;
    let mut report = ProbeReport::default();
    for _ in 0..trials {
        report.trials += 1;
        let (px, py) = perturb_annulus_pair(rng, x, y, h, tol)?;
        let same = annulus::stratum(&px, &py, tol).is_ok_and(|s| s == base.stratum);
        if !same {
            report.escapes += 1;
            continue;
        }
        let other = annulus::plan(&px, &py, tol)?;
        report
            .deviations
            .push(path_deviation(&base.path, &other.path, tol.n_time_samples));
    }
    Ok(report)
}

fn jitter<R: Rng + ?Sized>(rng: &mut R, h: f64) -> Complex64 {
    Complex64::from_polar(h * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Perturbs a disc pair within `h` while keeping collinear factors
/// collinear and cooriented pairs cooriented.
pub fn perturb_disc_pair<R: Rng + ?Sized>(
    rng: &mut R,
    x: &Configuration<PlanePoint>,
    y: &Configuration<PlanePoint>,
    h: f64,
    tol: &Tolerances,
) -> Result<(Configuration<PlanePoint>, Configuration<PlanePoint>)> {
    let oriented = disc3::stratum(x, y, tol)?.oriented;
    let mut moved = |c: &Configuration<PlanePoint>| -> Result<Configuration<PlanePoint>> {
        let z: Vec<Complex64> = c.points().iter().map(|p| p.to_complex()).collect();
        let out: Vec<Complex64> = if is_collinear(c, tol)? {
            // slide along the line, then translate the whole line
            let (a, b) = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .max_by(|&(i, j), &(k, l)| (z[i] - z[j]).norm().total_cmp(&(z[k] - z[l]).norm()))
                .expect("three points");
            let dir = (z[b] - z[a]) / (z[b] - z[a]).norm();
            let shift = jitter(rng, h / 2.0);
            z.iter()
                .map(|&p| p + dir * rng.gen_range(-h / 2.0..=h / 2.0) + shift)
                .collect()
        } else {
            z.iter().map(|&p| p + jitter(rng, h)).collect()
        };
        Configuration::new(out.into_iter().map(PlanePoint::from).collect())
    };
    let px = moved(x)?;
    let mut py = moved(y)?;
    if oriented {
        let gap = (orientation(&px)?.delta / orientation(&py)?.delta).arg();
        py = disc3::rotate(&py, gap / 6.0)?;
    }
    Ok((px, py))
}

/// Disc analogue of [`annulus_continuity_probe`].
pub fn disc_continuity_probe<R: Rng + ?Sized>(
    rng: &mut R,
    x: &Configuration<PlanePoint>,
    y: &Configuration<PlanePoint>,
    h: f64,
    trials: usize,
    tol: &Tolerances,
) -> Result<ProbeReport> {
    let base = disc3::plan(x, y, tol)?;
    let mut report = ProbeReport::default();
    for _ in 0..trials {
        report.trials += 1;
        let (px, py) = perturb_disc_pair(rng, x, y, h, tol)?;
        if disc3::stratum(&px, &py, tol)? != base.stratum {
            report.escapes += 1;
            continue;
        }
        let other = disc3::plan(&px, &py, tol)?;
        report
            .deviations
            .push(path_deviation(&base.path, &other.path, tol.n_time_samples));
    }
    Ok(report)
}

/// Stratum histogram of random pairs. Annulus labels are degrees `1 … 2n`;
/// disc labels are the levels `0 … 3` of `E0 … E3`.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub surface: Surface,
    pub n: usize,
    pub trials: usize,
    pub histogram: BTreeMap<usize, usize>,
    /// Pairs whose labeling raised an error.
    pub unlabeled: usize,
}

impl PartitionReport {
    pub fn label_name(&self, label: usize) -> String {
        match self.surface {
            Surface::Annulus => label.to_string(),
            Surface::Disc => format!("E{label}"),
        }
    }

    pub fn labeled(&self) -> usize {
        self.histogram.values().sum()
    }
}

/// Labels `trials` random pairs drawn from the seeded pair samplers. The disc
/// surface always uses `n = 3`.
pub fn partition_check(surface: Surface, n: usize, trials: usize, seed: u64, tol: &Tolerances) -> PartitionReport {
    let mut rng = seeded(seed);
    let mut histogram = BTreeMap::new();
    let mut unlabeled = 0;
    for _ in 0..trials {
        let label = match surface {
            Surface::Annulus => {
                let (x, y) = annulus_pair(&mut rng, n);
                annulus::stratum(&x, &y, tol).map(|s| s.degree)
            }
            Surface::Disc => {
                let (x, y) = disc_pair(&mut rng);
                disc3::stratum(&x, &y, tol).map(|s| s.index as usize)
            }
        };
        match label {
            Ok(l) => *histogram.entry(l).or_insert(0) += 1,
            Err(_) => unlabeled += 1,
        }
    }
    PartitionReport {
        surface,
        n: if surface == Surface::Disc { 3 } else { n },
        trials,
        histogram,
        unlabeled,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_perturbation_has_zero_deviation() {
        let tol = Tolerances::default();
        let mut rng = seeded(5);
        let (x, y) = annulus_pair(&mut rng, 3);
        let r = annulus_continuity_probe(&mut rng, &x, &y, 0.0, 3, &tol).unwrap();
        assert_eq!(r.accepted(), 3);
        assert_eq!(r.max_deviation(), 0.0);
        let (x, y) = disc_pair(&mut rng);
        let r = disc_continuity_probe(&mut rng, &x, &y, 0.0, 2, &tol).unwrap();
        // re-coorienting a cooriented pair may turn it by a rounding-sized angle
        assert!(r.max_deviation() < 1e-12);
    }

    #[test]
    fn small_partition_runs() {
        let tol = Tolerances::default();
        let r = partition_check(Surface::Annulus, 2, 2000, 9, &tol);
        assert_eq!(r.labeled() + r.unlabeled, 2000);
        assert!(r.histogram.keys().all(|&k| (1..=4).contains(&k)));
        let r = partition_check(Surface::Disc, 3, 2000, 9, &tol);
        assert_eq!(r.histogram.len(), 4);
        assert_eq!(r.label_name(2), "E2");
    }
}
