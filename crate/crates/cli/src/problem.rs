//! Problem files: one JSON document per problem, complex numbers as `[re, im]`.
//!
//! ```json
//! { "domain": "disc", "nodes": [[0, 0], [0.5, 0]], "targets": [[0, 0], [0.5, 0]] }
//! ```
//!
//! Indices in files (`pair`, `coordinate`) are 1-based.

use pickbody::complex::ComplexPoint;
use pickbody::minkowski::Ray;
use pickbody::pick::{InterpolationProblem, NodeSet, DEFAULT_SEPARATION};
use pickbody::polydisc::PolyPoint;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    #[default]
    Disc,
    Polydisc,
}

/// A 2-D affine slice `base + x·u + y·v` of target space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceSpec {
    /// Defaults to the zero tuple.
    #[serde(default)]
    pub base: Option<Vec<ComplexPoint>>,
    pub directions: [Vec<ComplexPoint>; 2],
    pub x_range: [f64; 2],
    pub y_range: [f64; 2],
    /// Grid points per axis.
    #[serde(default = "default_resolution")]
    pub resolution: usize,
}

fn default_resolution() -> usize {
    101
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub domain: Domain,
    #[serde(default)]
    pub m: Option<usize>,
    /// Disc nodes.
    #[serde(default)]
    pub nodes: Option<Vec<ComplexPoint>>,
    /// Polydisc points, each with `m` coordinates.
    #[serde(default)]
    pub points: Option<Vec<Vec<ComplexPoint>>>,
    #[serde(default)]
    pub targets: Option<Vec<ComplexPoint>>,
    #[serde(default)]
    pub alpha: Option<Vec<ComplexPoint>>,
    #[serde(default)]
    pub pair: Option<[usize; 2]>,
    /// Graph-disc slot for `delta`.
    #[serde(default)]
    pub coordinate: Option<usize>,
    /// Evaluation points for `solve`.
    #[serde(default)]
    pub samples: Option<Vec<ComplexPoint>>,
    #[serde(default)]
    pub slice: Option<SliceSpec>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// First pair (1-based) closer than [`DEFAULT_SEPARATION`].
fn duplicate_pair<T>(items: &[T], dist: impl Fn(&T, &T) -> f64) -> Option<(usize, usize)> {
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if dist(&items[i], &items[j]) < DEFAULT_SEPARATION {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: Self = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            if path == "." {
                input(inner.to_string())
            } else {
                input(format!("field `{path}`: {inner}"))
            }
        })?;
        file.validate()?;
        Ok(file)
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<(), CliError> {
        match self.domain {
            Domain::Disc => {
                let nodes = self.nodes.as_ref().ok_or_else(|| input("disc problems need `nodes`"))?;
                if let Some((i, j)) = duplicate_pair(nodes, |a, b| (a - b).norm()) {
                    return Err(input(format!("duplicate nodes: entries {i} and {j} of `nodes` coincide")));
                }
                if self.points.is_some() {
                    return Err(input("`points` belongs to polydisc problems"));
                }
            }
            Domain::Polydisc => {
                let m = self.m.ok_or_else(|| input("polydisc problems need `m`"))?;
                if !(2..=3).contains(&m) {
                    return Err(input(format!("field `m`: polydisc dimension must be 2 or 3, got {m}")));
                }
                let points = self.points.as_ref().ok_or_else(|| input("polydisc problems need `points`"))?;
                for (k, p) in points.iter().enumerate() {
                    if p.len() != m {
                        return Err(input(format!("field `points[{k}]`: expected {m} coordinates, got {}", p.len())));
                    }
                }
                let sup = |a: &Vec<ComplexPoint>, b: &Vec<ComplexPoint>| {
                    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
                };
                if let Some((i, j)) = duplicate_pair(points, sup) {
                    return Err(input(format!("duplicate points: entries {i} and {j} of `points` coincide")));
                }
                if self.nodes.is_some() {
                    return Err(input("`nodes` belongs to disc problems"));
                }
            }
        }
        Ok(())
    }

    /// Number of nodes or points.
    pub fn len(&self) -> usize {
        match self.domain {
            Domain::Disc => self.nodes.as_ref().map_or(0, Vec::len),
            Domain::Polydisc => self.points.as_ref().map_or(0, Vec::len),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn require_disc(&self, command: &str) -> Result<(), CliError> {
        if self.domain != Domain::Disc {
            return Err(input(format!("`{command}` needs a disc problem")));
        }
        Ok(())
    }

    pub fn node_set(&self) -> Result<NodeSet, CliError> {
        self.require_disc("nodes")?;
        NodeSet::new(self.nodes.clone().unwrap_or_default()).map_err(|e| input(format!("field `nodes`: {e}")))
    }

    pub fn interpolation_problem(&self) -> Result<InterpolationProblem, CliError> {
        let nodes = self.node_set()?;
        let targets = self.targets.clone().ok_or_else(|| input("missing `targets`"))?;
        InterpolationProblem::new(nodes, targets).map_err(|e| input(format!("field `targets`: {e}")))
    }

    /// `alpha`, falling back to `targets`.
    pub fn direction(&self) -> Result<Vec<ComplexPoint>, CliError> {
        self.alpha.clone().or_else(|| self.targets.clone()).ok_or_else(|| input("missing `alpha` (or `targets`)"))
    }

    pub fn ray(&self) -> Result<Ray, CliError> {
        Ray::new(self.node_set()?, self.direction()?).map_err(|e| input(format!("field `alpha`: {e}")))
    }

    /// The 0-based pair.
    pub fn pair(&self) -> Result<(usize, usize), CliError> {
        let [i, j] = self.pair.ok_or_else(|| input("missing `pair`"))?;
        let n = self.len();
        for k in [i, j] {
            if k == 0 || k > n {
                return Err(input(format!("field `pair`: index {k} outside 1..={n}")));
            }
        }
        if i == j {
            return Err(input(format!("field `pair`: indices must differ (got {i} twice)")));
        }
        Ok((i - 1, j - 1))
    }

    /// The 0-based graph-disc slot, if given.
    pub fn coordinate(&self) -> Result<Option<usize>, CliError> {
        match (self.coordinate, self.m) {
            (None, _) => Ok(None),
            (Some(k), Some(m)) if (1..=m).contains(&k) => Ok(Some(k - 1)),
            (Some(k), _) => Err(input(format!("field `coordinate`: {k} is not a slot of the polydisc"))),
        }
    }

    pub fn poly_points(&self) -> Result<Vec<PolyPoint>, CliError> {
        if self.domain != Domain::Polydisc {
            return Err(input("expected a polydisc problem"));
        }
        self.points
            .clone()
            .unwrap_or_default()
            .into_iter()
            .enumerate()
            .map(|(k, p)| PolyPoint::new(p).map_err(|e| input(format!("field `points[{k}]`: {e}"))))
            .collect()
    }
}
