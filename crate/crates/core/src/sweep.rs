//! The roundtrip sweep: build `M_k(F^σ[H])`, scramble its basis, recover a
//! decomposition, and check it against the input data. Grid points are
//! independent, so they run data-parallel when the `parallel` feature is on.

use serde::Serialize;

use crate::cohomology::{h2_group, Cocycle};
use crate::constructors::{model_algebra, scramble};
use crate::error::{Error, Result};
use crate::field::linalg::Matrix;
use crate::field::Field;
use crate::group::{all_subgroups, FiniteGroup, Subgroup};
use crate::recovery::{decompose, decomposition_equivalent, decomposition_verify, GradedDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential execution without the `parallel` feature.
    Parallel,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub groups: Vec<String>,
    pub max_k: usize,
    pub max_subgroup_order: usize,
    pub tuples_per_k: usize,
    pub primes: Vec<u64>,
    pub seeds: u64,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            groups: ["Z2", "Z4", "Z2xZ2", "Z6", "S3"].map(String::from).to_vec(),
            max_k: 3,
            max_subgroup_order: 4,
            tuples_per_k: 3,
            primes: vec![5, 7, 13],
            seeds: 25,
        }
    }
}

/// One model algebra of the grid.
#[derive(Clone, Debug)]
pub struct GridPoint {
    pub group_name: String,
    pub group: FiniteGroup,
    pub tuple: Vec<usize>,
    pub subgroup: Subgroup,
    /// Position of the cohomology class in enumeration order.
    pub class: usize,
    pub sigma: Cocycle,
}

impl GridPoint {
    pub fn field(&self) -> &Field {
        self.sigma.field()
    }

    pub fn data(&self) -> GradedDecomposition {
        let k = self.tuple.len();
        let n = k * k * self.subgroup.order();
        GradedDecomposition {
            k,
            tuple: self.tuple.clone(),
            subgroup: self.subgroup.clone(),
            sigma: self.sigma.clone(),
            iso: Matrix::identity(self.field(), n),
        }
    }
}

/// Up to `count` tuples of length `k` with first entry `e`, spread evenly
/// over the lexicographic enumeration of the remaining entries.
pub fn sample_tuples(g: &FiniteGroup, k: usize, count: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let total = n.pow(k as u32 - 1);
    let mut picks: Vec<usize> = match count {
        0 => vec![],
        1 => vec![0],
        c => (0..c).map(|i| i * (total - 1) / (c - 1)).collect(),
    };
    picks.dedup();
    picks
        .into_iter()
        .map(|mut idx| {
            let mut t = vec![g.identity(); k];
            for slot in t.iter_mut().skip(1).rev() {
                *slot = idx % n;
                idx /= n;
            }
            t
        })
        .collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All points of the grid, in a fixed order. Only pairs with
/// `p > k²|H|` and `p ∤ |H|` are kept.
pub fn grid(config: &SweepConfig) -> Result<Vec<GridPoint>> {
    let mut out = Vec::new();
    for name in &config.groups {
        let g = FiniteGroup::named(name).ok_or_else(|| Error::Parse(format!("unknown group name {name:?}")))?;
        for h in all_subgroups(&g).into_iter().filter(|h| h.order() <= config.max_subgroup_order) {
            let hg = h.as_group(&g);
            for &p in &config.primes {
                let f = Field::prime(p)?;
                let m = gcd(h.order() as u64, p - 1);
                let classes = h2_group(&hg, m)?.all_classes();
                for k in 1..=config.max_k {
                    if (k * k * h.order()) as u64 >= p || h.order() as u64 % p == 0 {
                        continue;
                    }
                    for tuple in sample_tuples(&g, k, config.tuples_per_k) {
                        for (class, c) in classes.iter().enumerate() {
                            out.push(GridPoint {
                                group_name: name.clone(),
                                group: g.clone(),
                                tuple: tuple.clone(),
                                subgroup: h.clone(),
                                class,
                                sigma: Cocycle::from_exponents(&f, &hg, c)?,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs one scramble seed through the full loop; `Err` carries the reason.
pub fn check_point(point: &GridPoint, seed: u64) -> std::result::Result<(), String> {
    let f = point.field();
    let model = model_algebra(f, &point.group, &point.tuple, &point.subgroup, &point.sigma).map_err(|e| e.to_string())?;
    let (r, _) = scramble(&model, seed).map_err(|e| e.to_string())?;
    let d = decompose(&r, seed).map_err(|e| format!("decompose: {e}"))?;
    decomposition_verify(&r, &d).map_err(|e| format!("verify: {e}"))?;
    let q = f.q() - 1;
    match decomposition_equivalent(&d, &point.data(), &point.group, q) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("recovered k = {}, tuple {:?}, H {:?} is not equivalent", d.k, d.tuple, d.subgroup.members())),
        Err(e) => Err(format!("equivalence: {e}")),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointOutcome {
    pub group: String,
    pub p: u64,
    pub k: usize,
    pub tuple: Vec<usize>,
    pub subgroup: Vec<usize>,
    pub class: usize,
    pub passed: u64,
    pub failures: Vec<(u64, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub points: Vec<PointOutcome>,
    pub runs: u64,
    pub passed: u64,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.runs == self.passed
    }
}

#[cfg(feature = "parallel")]
fn map_tasks<T: Sync, R: Send>(exec: Execution, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel => items.par_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn map_tasks<T: Sync, R: Send>(_exec: Execution, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Every `(point, seed)` pair; results are assembled in grid order, so the
/// report does not depend on the execution mode.
pub fn run_points(points: &[GridPoint], seeds: u64, exec: Execution) -> SweepReport {
    let tasks: Vec<(usize, u64)> = (0..points.len()).flat_map(|i| (0..seeds).map(move |s| (i, s))).collect();
    let results = map_tasks(exec, &tasks, |&(i, s)| check_point(&points[i], s));
    let mut outcomes: Vec<PointOutcome> = points
        .iter()
        .map(|pt| PointOutcome {
            group: pt.group_name.clone(),
            p: pt.field().p(),
            k: pt.tuple.len(),
            tuple: pt.tuple.clone(),
            subgroup: pt.subgroup.members().to_vec(),
            class: pt.class,
            passed: 0,
            failures: Vec::new(),
        })
        .collect();
    for (&(i, s), res) in tasks.iter().zip(results) {
        match res {
            Ok(()) => outcomes[i].passed += 1,
            Err(msg) => outcomes[i].failures.push((s, msg)),
        }
    }
    let passed = outcomes.iter().map(|o| o.passed).sum();
    SweepReport { points: outcomes, runs: tasks.len() as u64, passed }
}

pub fn run(config: &SweepConfig, exec: Execution) -> Result<SweepReport> {
    Ok(run_points(&grid(config)?, config.seeds, exec))
}
