use std::fmt;

use serde::Serialize;

use super::orientation::{collinear_of, orientation_of, triple};
use crate::config_space::{Configuration, PlanePoint, Tolerances};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StratumIndex {
    E0,
    E1,
    E2,
    E3,
}

/// Collinear (`L`) or triangular (`T`) class of each factor, `x` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Component {
    LL,
    TL,
    LT,
    TT,
}

impl Component {
    pub fn new(x_line: bool, y_line: bool) -> Self {
        match (x_line, y_line) {
            (true, true) => Component::LL,
            (false, true) => Component::TL,
            (true, false) => Component::LT,
            (false, false) => Component::TT,
        }
    }

    pub fn x_is_line(self) -> bool {
        matches!(self, Component::LL | Component::LT)
    }

    pub fn y_is_line(self) -> bool {
        matches!(self, Component::LL | Component::TL)
    }

    /// Number of triangular factors.
    fn triangles(self) -> usize {
        usize::from(!self.x_is_line()) + usize::from(!self.y_is_line())
    }
}

/// Label of a pair of 3-point configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DiscStratum {
    pub index: StratumIndex,
    pub component: Component,
    /// Whether the pair is cooriented.
    pub oriented: bool,
}

impl DiscStratum {
    pub fn new(component: Component, oriented: bool) -> Self {
        // each triangular factor and non-coorientation raise the index by one
        let level = component.triangles() + usize::from(!oriented);
        let index = match level {
            0 => StratumIndex::E0,
            1 => StratumIndex::E1,
            2 => StratumIndex::E2,
            _ => StratumIndex::E3,
        };
        DiscStratum {
            index,
            component,
            oriented,
        }
    }
}

impl fmt::Display for DiscStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}({},{:?})",
            self.index,
            if self.oriented { "P" } else { "N" },
            self.component
        )
    }
}

/// Assigns the pair to exactly one of `E0..E3`.
pub fn stratum(x: &Configuration<PlanePoint>, y: &Configuration<PlanePoint>, tol: &Tolerances) -> Result<DiscStratum> {
    let (zx, zy) = (triple(x.points())?, triple(y.points())?);
    let oriented = (orientation_of(&zx) - orientation_of(&zy)).norm() < tol.tau_geom;
    let component = Component::new(collinear_of(&zx, tol.tau_geom), collinear_of(&zy, tol.tau_geom));
    Ok(DiscStratum::new(component, oriented))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conf(pts: &[(f64, f64)]) -> Configuration<PlanePoint> {
        Configuration::new(pts.iter().map(|&(a, b)| PlanePoint::new(a, b)).collect()).unwrap()
    }

    #[test]
    fn table_matches_definition() {
        use Component::*;
        use StratumIndex::*;
        let cases = [
            (LL, true, E0),
            (LL, false, E1),
            (TL, true, E1),
            (LT, true, E1),
            (TL, false, E2),
            (LT, false, E2),
            (TT, true, E2),
            (TT, false, E3),
        ];
        for (c, o, e) in cases {
            assert_eq!(DiscStratum::new(c, o).index, e, "{c:?} {o}");
        }
    }

    #[test]
    fn stratum_examples() {
        let tol = Tolerances::default();
        let line = conf(&[(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0)]);
        let vertical = conf(&[(0.0, 0.0), (0.0, 1.0), (0.0, -1.0)]);
        let s = 3f64.sqrt() / 2.0;
        let tri = conf(&[(1.0, 0.0), (-0.5, s), (-0.5, -s)]);

        let diag = stratum(&line, &line, &tol).unwrap();
        assert_eq!(
            (diag.index, diag.component, diag.oriented),
            (StratumIndex::E0, Component::LL, true)
        );

        let e1 = stratum(&line, &vertical, &tol).unwrap();
        assert_eq!(
            (e1.index, e1.component, e1.oriented),
            (StratumIndex::E1, Component::LL, false)
        );

        let e2 = stratum(&line, &tri, &tol).unwrap();
        assert_eq!(
            (e2.index, e2.component, e2.oriented),
            (StratumIndex::E2, Component::LT, false)
        );
        assert_eq!(e2.to_string(), "E2(N,LT)");
    }
}
