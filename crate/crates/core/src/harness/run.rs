//! Configuration files, planner runs and their JSON export.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::random::SurfaceConfiguration;
use super::svg::render_svg;
use crate::annulus;
use crate::config_space::{
    validate_path, AnnulusPoint, Configuration, Motion, PathPlan, PlanePoint, Surface, SurfacePoint, Tolerances,
    ValidationReport,
};
use crate::disc3;
use crate::error::HarnessError;

/// On-disk form of a configuration: `{"surface": "annulus", "n": 2,
/// "points": [[θ, h], …]}` or `{"surface": "disc", "n": 3, "points":
/// [[re, im], …]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub surface: Surface,
    pub n: usize,
    pub points: Vec<[f64; 2]>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Format(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, HarnessError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn configuration(&self) -> Result<SurfaceConfiguration, HarnessError> {
        if self.points.len() != self.n {
            return Err(HarnessError::Format(format!(
                "n = {} but {} points given",
                self.n,
                self.points.len()
            )));
        }
        if self.points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(HarnessError::Format("non-finite coordinate".into()));
        }
        Ok(match self.surface {
            Surface::Annulus => SurfaceConfiguration::Annulus(Configuration::new(
                self.points.iter().map(|&c| AnnulusPoint::from_coords(c)).collect(),
            )?),
            Surface::Disc => SurfaceConfiguration::Disc(Configuration::new(
                self.points.iter().map(|&c| PlanePoint::from_coords(c)).collect(),
            )?),
        })
    }

    pub fn of(c: &SurfaceConfiguration) -> Self {
        ConfigFile {
            surface: c.surface(),
            n: c.len(),
            points: c.coords(),
        }
    }
}

/// Raw track positions at one time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub t: f64,
    pub points: Vec<[f64; 2]>,
}

/// A completed planner invocation with everything needed to export it.
#[derive(Debug, Clone, Serialize)]
pub struct PlannerRun {
    pub surface: Surface,
    pub n: usize,
    pub start: Vec<[f64; 2]>,
    pub goal: Vec<[f64; 2]>,
    pub stratum: String,
    pub segment_count: usize,
    pub segments: Value,
    pub samples: Vec<Sample>,
    pub report: ValidationReport,
    pub trace: Option<Value>,
}

fn coords<P: SurfacePoint>(pts: &[P]) -> Vec<[f64; 2]> {
    pts.iter().map(SurfacePoint::coords).collect()
}

fn build<M: Motion>(
    path: &PathPlan<M>,
    stratum: String,
    trace: Option<Value>,
    samples: usize,
    tol: &Tolerances,
) -> Result<PlannerRun, HarnessError> {
    Ok(PlannerRun {
        surface: M::Point::SURFACE,
        n: path.start().len(),
        start: coords(path.start().points()),
        goal: coords(path.goal().points()),
        stratum,
        segment_count: path.segment_count(),
        segments: serde_json::to_value(path).map_err(|e| HarnessError::Format(e.to_string()))?,
        samples: path
            .sample_tracks(samples)
            .into_iter()
            .map(|(t, pts)| Sample {
                t,
                points: coords(&pts),
            })
            .collect(),
        report: validate_path(path, tol),
        trace,
    })
}

impl PlannerRun {
    pub fn annulus(
        x: &Configuration<AnnulusPoint>,
        y: &Configuration<AnnulusPoint>,
        samples: usize,
        tol: &Tolerances,
    ) -> Result<Self, HarnessError> {
        let plan = annulus::plan(x, y, tol)?;
        let trace = serde_json::to_value(&plan.trace).map_err(|e| HarnessError::Format(e.to_string()))?;
        build(&plan.path, plan.stratum.to_string(), Some(trace), samples, tol)
    }

    pub fn disc(
        x: &Configuration<PlanePoint>,
        y: &Configuration<PlanePoint>,
        samples: usize,
        tol: &Tolerances,
    ) -> Result<Self, HarnessError> {
        let plan = disc3::plan(x, y, tol)?;
        build(&plan.path, plan.stratum.to_string(), None, samples, tol)
    }

    pub fn plan(
        x: &SurfaceConfiguration,
        y: &SurfaceConfiguration,
        samples: usize,
        tol: &Tolerances,
    ) -> Result<Self, HarnessError> {
        match (x, y) {
            (SurfaceConfiguration::Annulus(x), SurfaceConfiguration::Annulus(y)) => Self::annulus(x, y, samples, tol),
            (SurfaceConfiguration::Disc(x), SurfaceConfiguration::Disc(y)) => Self::disc(x, y, samples, tol),
            _ => Err(HarnessError::Format("start and goal lie on different surfaces".into())),
        }
    }

    /// The exported document `{surface, n, stratum, samples, segments}`.
    /// Runs whose endpoints do not match are never exported.
    pub fn export(&self) -> Result<Value, HarnessError> {
        if !self.report.endpoints_ok {
            return Err(HarnessError::InvalidRun);
        }
        Ok(json!({
            "surface": self.surface,
            "n": self.n,
            "stratum": self.stratum,
            "samples": self.samples,
            "segments": self.segments,
        }))
    }

    pub fn write_json(&self, path: &Path) -> Result<(), HarnessError> {
        let doc = self.export()?;
        let text = serde_json::to_string_pretty(&doc).map_err(|e| HarnessError::Format(e.to_string()))?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }

    pub fn svg(&self) -> Result<String, HarnessError> {
        if !self.report.endpoints_ok {
            return Err(HarnessError::InvalidRun);
        }
        Ok(render_svg(self.surface, &self.samples))
    }

    pub fn write_svg(&self, path: &Path) -> Result<(), HarnessError> {
        std::fs::write(path, self.svg()?)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_file_round_trip() {
        let text = r#"{"surface": "annulus", "n": 2, "points": [[0.25, 1.0], [0.75, -1.0]]}"#;
        let f = ConfigFile::parse(text).unwrap();
        let c = f.configuration().unwrap();
        assert_eq!(c.surface(), Surface::Annulus);
        let again = ConfigFile::parse(&serde_json::to_string(&ConfigFile::of(&c)).unwrap()).unwrap();
        assert_eq!(again.configuration().unwrap(), c);
    }

    #[test]
    fn config_file_errors() {
        assert!(matches!(ConfigFile::parse("{"), Err(HarnessError::Format(_))));
        assert!(matches!(
            ConfigFile::parse(r#"{"surface": "torus", "n": 1, "points": [[0, 0]]}"#),
            Err(HarnessError::Format(_))
        ));
        let f = ConfigFile::parse(r#"{"surface": "disc", "n": 2, "points": [[0, 0]]}"#).unwrap();
        assert!(matches!(f.configuration(), Err(HarnessError::Format(_))));
        let f = ConfigFile::parse(r#"{"surface": "disc", "n": 2, "points": [[0, 0], [0, 0]]}"#).unwrap();
        assert!(matches!(f.configuration(), Err(HarnessError::Plan(_))));
    }

    #[test]
    fn export_schema() {
        let tol = Tolerances::default();
        let x = Configuration::new(vec![AnnulusPoint::new(0.0, 0.0), AnnulusPoint::new(0.5, 0.0)]).unwrap();
        let y = Configuration::new(vec![AnnulusPoint::new(0.0, 1.0), AnnulusPoint::new(0.0, 2.0)]).unwrap();
        let run = PlannerRun::annulus(&x, &y, 5, &tol).unwrap();
        let doc = run.export().unwrap();
        let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 5);
        for k in ["surface", "n", "stratum", "samples", "segments"] {
            assert!(keys.contains(&k));
        }
        assert_eq!(doc["surface"], "annulus");
        assert_eq!(doc["samples"].as_array().unwrap().len(), 5);
        assert_eq!(doc["samples"][0]["t"], 0.0);

        let mut broken = run.clone();
        broken.report.endpoints_ok = false;
        assert!(matches!(broken.export(), Err(HarnessError::InvalidRun)));
        assert!(matches!(broken.svg(), Err(HarnessError::InvalidRun)));
    }
}
