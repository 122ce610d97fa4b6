//! Evasion strategy for a speed-`t` robber on a `(d+1)`-regular graph of
//! girth greater than `2t + 2`, together with the lower bound on the cop
//! number it certifies.
//!
//! A cop *controls* a vertex when it stands on it or next to it, and
//! controls a path when it controls one of its vertices. The robber at `r`
//! keeps a [`SafeWitness`]: `m` vertices `S`, each the far end of a length-`t`
//! path from `r` that no cop controls. After the cops move, none of them can
//! be on those paths, so the robber may run to any `s` in `S`. She picks one
//! from which at least `m` *escaping paths* (length `t`, leaving `s` away from
//! the old witness paths) are still uncontrolled; those paths form the next
//! witness.
//!
//! Every step re-checks the facts the argument relies on and reports a
//! violation instead of trusting them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Path, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("graph is not {expected}-regular")]
    NotRegular { expected: usize },
    #[error("graph girth {girth:?} is not larger than {needed}")]
    GirthTooSmall { girth: Option<usize>, needed: usize },
    #[error("cop at {0} stands inside the witness footprint")]
    CopInFootprint(Vertex),
}

/// `(d, t, m)` with `alpha = m / d^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    d: u64,
    t: u64,
    m: u64,
}

impl BoundParams {
    /// Requires `d >= 2`, `t >= 1` and `1 <= m <= d^t - 1`.
    ///
    /// The hypothesis `t <= d + 1` is reported by
    /// [`BoundParams::speed_hypothesis_holds`] rather than enforced: the
    /// per-cop bound needs it, but the strategy and the other counts do not.
    pub fn new(d: u64, t: u64, m: u64) -> Result<Self, StrategyError> {
        if d < 2 {
            return Err(StrategyError::BadParams(format!("d = {d} must be at least 2")));
        }
        if t < 1 {
            return Err(StrategyError::BadParams("speed must be positive".into()));
        }
        let dt = d
            .checked_pow(t as u32)
            .ok_or_else(|| StrategyError::BadParams("d^t overflows".into()))?;
        if m < 1 || m >= dt {
            return Err(StrategyError::BadParams(format!(
                "m = {m} must lie in [1, {}]",
                dt - 1
            )));
        }
        Ok(BoundParams { d, t, m })
    }

    /// Parameters for a graph of the given degree with `m = floor(d^t / 2)`.
    pub fn half_alpha(degree: usize, t: usize) -> Result<Self, StrategyError> {
        let d = (degree as u64).saturating_sub(1);
        let dt = d.checked_pow(t as u32).unwrap_or(0);
        Self::new(d, t as u64, (dt / 2).max(1))
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `d^t`, the number of escaping paths leaving each witness target.
    pub fn d_pow_t(&self) -> u64 {
        self.d.pow(self.t as u32)
    }

    pub fn alpha(&self) -> BigRational {
        ratio(self.m, self.d_pow_t())
    }

    pub fn speed_hypothesis_holds(&self) -> bool {
        self.t <= self.d + 1
    }

    /// `alpha (1 - alpha) d^{2t} / 2 = m (d^t - m) / 2`. Fewer controlled
    /// escaping paths than this guarantees a safe successor.
    pub fn averaging_budget(&self) -> BigRational {
        ratio(self.m * (self.d_pow_t() - self.m), 2)
    }

    pub fn claim_bounds(&self) -> ClaimBounds {
        let (d1, t) = (big(self.d + 1), self.t as u32);
        let outside = BigInt::from(self.t) * num_traits::pow(d1.clone(), (t - 1) as usize);
        let first = num_traits::pow(d1.clone(), t as usize);
        ClaimBounds {
            per_vertex_outside_targets: outside.clone(),
            per_vertex_on_target: &first + &outside,
            per_cop_sharp: &first + BigInt::from(self.d + 2) * &outside,
            per_cop: BigInt::from(self.t + 2) * first,
        }
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(big(num), big(den))
}

/// `alpha (1 - alpha) d^{2t} / (2 (t+2) (d+1)^t)`, exactly.
pub fn evasion_bound(p: &BoundParams) -> BigRational {
    let numerator = big(p.m) * big(p.d_pow_t() - p.m);
    let denominator = big(2) * big(p.t + 2) * num_traits::pow(big(p.d + 1), p.t as usize);
    BigRational::new(numerator, denominator)
}

/// Smallest integer cop count the bound does not rule out: with fewer than
/// `bound` cops the robber escapes, so at least `ceil(bound)` are needed.
pub fn certified_cop_lower_bound(bound: &BigRational) -> BigInt {
    bound.ceil().to_integer()
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Upper bounds on controlled escaping paths from the counting argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimBounds {
    /// `t (d+1)^{t-1}`: escaping paths through a vertex outside `S`.
    pub per_vertex_outside_targets: BigInt,
    /// `(d+1)^t + t (d+1)^{t-1}`: escaping paths through a vertex of `S`.
    pub per_vertex_on_target: BigInt,
    /// `(d+1)^t + (d+2) t (d+1)^{t-1}`.
    pub per_cop_sharp: BigInt,
    /// `(t+2)(d+1)^t`; dominates `per_cop_sharp` when `t <= d + 1`.
    pub per_cop: BigInt,
}

/// Closed neighbourhoods of all cops.
pub fn control_closure(g: &Graph, cops: &[Vertex]) -> BTreeSet<Vertex> {
    cops.iter()
        .flat_map(|&c| std::iter::once(c).chain(g.neighbors(c).iter().copied()))
        .collect()
}

pub fn is_controlled(path: &Path, controlled: &BTreeSet<Vertex>) -> bool {
    path.vertices().iter().any(|v| controlled.contains(v))
}

/// The robber's position `r` together with targets `S`, an uncontrolled
/// length-`t` path from `r` to each target, and the footprint `U` of those
/// paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SafeWitness {
    pub robber: Vertex,
    /// Keyed by target; serialized as a list of paths.
    #[serde(with = "paths_by_target")]
    pub paths: BTreeMap<Vertex, Path>,
    pub footprint: BTreeSet<Vertex>,
}

mod paths_by_target {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::graph::{Path, Vertex};

    pub fn serialize<S: Serializer>(paths: &BTreeMap<Vertex, Path>, ser: S) -> Result<S::Ok, S::Error> {
        paths.values().collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BTreeMap<Vertex, Path>, D::Error> {
        let list = Vec::<Path>::deserialize(de)?;
        Ok(list.into_iter().map(|p| (p.end(), p)).collect())
    }
}

impl SafeWitness {
    pub fn from_paths(robber: Vertex, paths: impl IntoIterator<Item = Path>) -> Self {
        let paths: BTreeMap<_, _> = paths.into_iter().map(|p| (p.end(), p)).collect();
        let footprint = paths
            .values()
            .flat_map(|p| p.vertices().iter().copied())
            .chain(std::iter::once(robber))
            .collect();
        SafeWitness {
            robber,
            paths,
            footprint,
        }
    }

    pub fn targets(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.paths.keys().copied()
    }

    pub fn size(&self) -> usize {
        self.paths.len()
    }
}

/// A broken invariant found while checking a witness or a step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    CopInFootprint { cop: Vertex },
    WitnessPathBlocked { target: Vertex },
    WrongWitnessSize { expected: u64, found: usize },
    MalformedWitnessPath { target: Vertex },
    ControlledWitnessPath { target: Vertex },
    TargetsNotIndependent { a: Vertex, b: Vertex },
    SharedOutsideNeighbor { vertex: Vertex },
    DuplicateEndpoints { target: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum StrategyOutcome {
    Moved { path: Path, next: SafeWitness },
    /// `(target, controlled escaping paths)` for each target.
    NoSafeSuccessor { controlled: Vec<(Vertex, usize)> },
    PreconditionViolated { violation: Violation },
}

/// Escaping paths through the closed neighbourhood of one cop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCounts {
    /// Escaping paths through each vertex the cop controls.
    pub per_vertex: BTreeMap<Vertex, usize>,
    /// Escaping paths the cop controls.
    pub total: usize,
    pub bounds: ClaimBounds,
}

/// The strategy bound to a graph that satisfies the regularity and girth
/// hypotheses.
#[derive(Debug, Clone)]
pub struct EvasionRobber<'g> {
    graph: &'g Graph,
    params: BoundParams,
}

impl<'g> EvasionRobber<'g> {
    pub fn new(graph: &'g Graph, params: BoundParams) -> Result<Self, StrategyError> {
        let degree = (params.d + 1) as usize;
        if graph.n() == 0 || graph.is_regular() != Some(degree) {
            return Err(StrategyError::NotRegular { expected: degree });
        }
        let needed = 2 * params.t as usize + 2;
        match graph.girth() {
            Some(g) if g > needed => {}
            girth => return Err(StrategyError::GirthTooSmall { girth, needed }),
        }
        Ok(EvasionRobber { graph, params })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn params(&self) -> BoundParams {
        self.params
    }

    fn t(&self) -> usize {
        self.params.t as usize
    }

    fn m(&self) -> usize {
        self.params.m as usize
    }

    /// Uncontrolled length-`t` paths out of `r` whose second vertex avoids
    /// `forbidden_second`, smallest first, at most `limit` of them.
    fn uncontrolled_paths(
        &self,
        r: Vertex,
        forbidden_second: &BTreeSet<Vertex>,
        controlled: &BTreeSet<Vertex>,
        limit: usize,
    ) -> Vec<Path> {
        self.graph
            .paths_of_length(r, self.t(), forbidden_second)
            .into_iter()
            .filter(|p| !is_controlled(p, controlled))
            .take(limit)
            .collect()
    }

    fn witness_at(&self, r: Vertex, controlled: &BTreeSet<Vertex>) -> Option<SafeWitness> {
        if controlled.contains(&r) {
            return None;
        }
        let paths = self.uncontrolled_paths(r, &BTreeSet::new(), controlled, self.m());
        (paths.len() == self.m()).then(|| SafeWitness::from_paths(r, paths))
    }

    /// Initial robber position and witness against the placed cops.
    ///
    /// With all cops on one vertex `u` the robber takes the smallest vertex at
    /// distance exactly `t + 1` from `u`. Otherwise vertices are tried in
    /// decreasing order of distance to the nearest cop.
    pub fn find_initial_witness(&self, cops: &[Vertex]) -> Option<SafeWitness> {
        let controlled = control_closure(self.graph, cops);
        let g = self.graph;
        let co_located = cops.windows(2).all(|w| w[0] == w[1]);
        if let (true, Some(&u)) = (co_located, cops.first()) {
            let dist = g.bfs_distances(u);
            if let Some(v) = g.vertices().find(|&v| dist[v] == self.t() + 1) {
                if let Some(w) = self.witness_at(v, &controlled) {
                    return Some(w);
                }
            }
        }
        let mut nearest = vec![usize::MAX; g.n()];
        for &c in cops {
            for (v, d) in g.bfs_distances(c).into_iter().enumerate() {
                nearest[v] = nearest[v].min(d);
            }
        }
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(nearest[v]), v));
        order.into_iter().find_map(|v| self.witness_at(v, &controlled))
    }

    /// Paths of length `t` starting in `S` whose second vertex lies outside
    /// `U`, in lexicographic order.
    pub fn enumerate_escaping_paths(&self, w: &SafeWitness) -> Vec<Path> {
        w.targets()
            .flat_map(|s| self.graph.paths_of_length(s, self.t(), &w.footprint))
            .collect()
    }

    /// Checks every invariant of `w` against the given cop positions.
    pub fn validate_witness(&self, w: &SafeWitness, cops: &[Vertex]) -> Result<(), Violation> {
        let g = self.graph;
        let controlled = control_closure(g, cops);
        if w.size() != self.m() {
            return Err(Violation::WrongWitnessSize {
                expected: self.params.m,
                found: w.size(),
            });
        }
        let mut interior = BTreeSet::new();
        for (&s, p) in &w.paths {
            if !p.is_valid_in(g) || p.len() != self.t() || p.start() != w.robber || p.end() != s {
                return Err(Violation::MalformedWitnessPath { target: s });
            }
            if is_controlled(p, &controlled) {
                return Err(Violation::ControlledWitnessPath { target: s });
            }
            for &v in &p.vertices()[..p.len()] {
                interior.insert(v);
            }
        }
        if let Some(s) = w.targets().find(|s| interior.contains(s)) {
            return Err(Violation::DuplicateEndpoints { target: s });
        }
        let targets: Vec<Vertex> = w.targets().collect();
        for (i, &a) in targets.iter().enumerate() {
            if let Some(&b) = targets[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
                return Err(Violation::TargetsNotIndependent { a, b });
            }
        }
        let expected: BTreeSet<Vertex> = w
            .paths
            .values()
            .flat_map(|p| p.vertices().iter().copied())
            .chain(std::iter::once(w.robber))
            .collect();
        if expected != w.footprint {
            return Err(Violation::MalformedWitnessPath { target: w.robber });
        }
        Ok(())
    }

    /// Checks that no vertex outside `U` touches two targets.
    pub fn check_single_attachment(&self, w: &SafeWitness) -> Result<(), Violation> {
        let mut attached: BTreeMap<Vertex, usize> = BTreeMap::new();
        for s in w.targets() {
            for &x in self.graph.neighbors(s) {
                if !w.footprint.contains(&x) {
                    *attached.entry(x).or_default() += 1;
                }
            }
        }
        match attached.into_iter().find(|&(_, c)| c > 1) {
            Some((vertex, _)) => Err(Violation::SharedOutsideNeighbor { vertex }),
            None => Ok(()),
        }
    }

    /// Number of controlled escaping paths for each target.
    pub fn controlled_counts(&self, w: &SafeWitness, cops: &[Vertex]) -> BTreeMap<Vertex, usize> {
        let controlled = control_closure(self.graph, cops);
        w.targets()
            .map(|s| {
                let count = self
                    .graph
                    .paths_of_length(s, self.t(), &w.footprint)
                    .iter()
                    .filter(|p| is_controlled(p, &controlled))
                    .count();
                (s, count)
            })
            .collect()
    }

    /// One robber move after the cops have moved to `new_cops`.
    pub fn strategy_step(&self, w: &SafeWitness, new_cops: &[Vertex]) -> StrategyOutcome {
        if let Some(&cop) = new_cops.iter().find(|c| w.footprint.contains(c)) {
            return StrategyOutcome::PreconditionViolated {
                violation: Violation::CopInFootprint { cop },
            };
        }
        let controlled = control_closure(self.graph, new_cops);
        let mut counts = Vec::new();
        for (&s, path) in &w.paths {
            if path.vertices().iter().any(|v| new_cops.contains(v)) {
                return StrategyOutcome::PreconditionViolated {
                    violation: Violation::WitnessPathBlocked { target: s },
                };
            }
            let escaping = self.graph.paths_of_length(s, self.t(), &w.footprint);
            let free: Vec<Path> = escaping
                .iter()
                .filter(|p| !is_controlled(p, &controlled))
                .take(self.m())
                .cloned()
                .collect();
            if free.len() == self.m() {
                let next = SafeWitness::from_paths(s, free);
                if next.size() != self.m() {
                    return StrategyOutcome::PreconditionViolated {
                        violation: Violation::DuplicateEndpoints { target: s },
                    };
                }
                return StrategyOutcome::Moved {
                    path: path.clone(),
                    next,
                };
            }
            counts.push((s, escaping.len() - free.len()));
        }
        StrategyOutcome::NoSafeSuccessor { controlled: counts }
    }

    /// Escaping paths through the closed neighbourhood of `cop`.
    pub fn claim_counts(&self, w: &SafeWitness, cop: Vertex) -> Result<ClaimCounts, StrategyError> {
        if w.footprint.contains(&cop) {
            return Err(StrategyError::CopInFootprint(cop));
        }
        let closure = control_closure(self.graph, &[cop]);
        let escaping = self.enumerate_escaping_paths(w);
        let per_vertex = closure
            .iter()
            .map(|&v| {
                let through = escaping.iter().filter(|p| p.vertices().contains(&v)).count();
                (v, through)
            })
            .collect();
        let total = escaping
            .iter()
            .filter(|p| is_controlled(p, &closure))
            .count();
        Ok(ClaimCounts {
            per_vertex,
            total,
            bounds: self.params.claim_bounds(),
        })
    }

    /// Distinct escaping paths controlled by any cop.
    pub fn total_controlled(&self, w: &SafeWitness, cops: &[Vertex]) -> usize {
        self.controlled_counts(w, cops).values().sum()
    }
}

/// Whether `count` is strictly below the averaging budget.
pub fn under_budget(params: &BoundParams, count: usize) -> bool {
    BigRational::from_integer(BigInt::from(count)) < params.averaging_budget()
}

/// Whether `cops` is strictly below the evasion bound, i.e. the bound
/// guarantees the robber escapes that many cops.
pub fn fewer_than_bound(params: &BoundParams, cops: usize) -> bool {
    BigRational::from_integer(BigInt::from(cops)) < evasion_bound(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn bound_values() {
        let b = |d, t, m| evasion_bound(&BoundParams::new(d, t, m).unwrap());
        assert_eq!(b(2, 2, 2), r(1, 18));
        assert_eq!(b(2, 4, 8), r(16, 243));
        assert_eq!(b(2, 2, 1), r(1, 24));
    }

    #[test]
    fn params_validation() {
        assert!(BoundParams::new(2, 2, 0).is_err());
        assert!(BoundParams::new(2, 2, 4).is_err());
        assert!(BoundParams::new(1, 2, 1).is_err());
        let p = BoundParams::new(2, 4, 8).unwrap();
        assert!(!p.speed_hypothesis_holds());
        assert_eq!(p.alpha(), r(1, 2));
        assert!(BoundParams::new(2, 3, 4).unwrap().speed_hypothesis_holds());
    }

    #[test]
    fn ceiling_semantics() {
        assert_eq!(certified_cop_lower_bound(&r(1, 18)), BigInt::from(1));
        assert_eq!(certified_cop_lower_bound(&r(3, 1)), BigInt::from(3));
        assert_eq!(certified_cop_lower_bound(&r(7, 2)), BigInt::from(4));
    }

    #[test]
    fn claim_bound_formulas() {
        let b = BoundParams::new(2, 2, 2).unwrap().claim_bounds();
        assert_eq!(b.per_vertex_outside_targets, BigInt::from(6));
        assert_eq!(b.per_vertex_on_target, BigInt::from(15));
        assert_eq!(b.per_cop, BigInt::from(36));
        assert!(b.per_cop_sharp <= b.per_cop);
        let b = BoundParams::new(2, 4, 8).unwrap().claim_bounds();
        assert_eq!(b.per_cop, BigInt::from(486));
        assert_eq!(b.per_cop_sharp, BigInt::from(513));
    }

    #[test]
    fn control() {
        let mcgee = catalog::build("mcgee").unwrap();
        assert_eq!(control_closure(&mcgee, &[5]).len(), 4);
        let c6 = Graph::cycle(6);
        assert_eq!(control_closure(&c6, &[3]), BTreeSet::from([2, 3, 4]));
        assert_eq!(control_closure(&mcgee, &[0, mcgee.neighbors(0)[0]]).len(), 6);

        let closure = BTreeSet::from([2, 3, 4]);
        assert!(!is_controlled(&Path(vec![0, 1]), &closure));
        assert!(is_controlled(&Path(vec![5, 4]), &closure));
        assert!(is_controlled(&Path(vec![0, 1, 2]), &closure));
    }

    #[test]
    fn preconditions() {
        let p = BoundParams::new(2, 2, 2).unwrap();
        let petersen = catalog::build("petersen").unwrap();
        assert!(matches!(
            EvasionRobber::new(&petersen, p),
            Err(StrategyError::GirthTooSmall { .. })
        ));
        assert!(matches!(
            EvasionRobber::new(&Graph::path(5), p),
            Err(StrategyError::NotRegular { expected: 3 })
        ));
        let mcgee = catalog::build("mcgee").unwrap();
        assert!(EvasionRobber::new(&mcgee, p).is_ok());
    }

    #[test]
    fn initial_witness_on_mcgee() {
        let mcgee = catalog::build("mcgee").unwrap();
        let robber = EvasionRobber::new(&mcgee, BoundParams::new(2, 2, 2).unwrap()).unwrap();
        for u in mcgee.vertices() {
            let w = robber.find_initial_witness(&[u]).expect("witness exists");
            assert_eq!(mcgee.bfs_distances(u)[w.robber], 3);
            robber.validate_witness(&w, &[u]).unwrap();
            robber.check_single_attachment(&w).unwrap();
        }
    }

    #[test]
    fn adjacent_candidates_are_skipped() {
        let mcgee = catalog::build("mcgee").unwrap();
        let robber = EvasionRobber::new(&mcgee, BoundParams::new(2, 2, 2).unwrap()).unwrap();
        let cops: Vec<Vertex> = (0..12).collect();
        if let Some(w) = robber.find_initial_witness(&cops) {
            assert!(!control_closure(&mcgee, &cops).contains(&w.robber));
            robber.validate_witness(&w, &cops).unwrap();
        }
    }

    #[test]
    fn escaping_paths_and_far_cop_step() {
        let mcgee = catalog::build("mcgee").unwrap();
        let robber = EvasionRobber::new(&mcgee, BoundParams::new(2, 2, 2).unwrap()).unwrap();
        let w = robber.find_initial_witness(&[0]).unwrap();
        let esc = robber.enumerate_escaping_paths(&w);
        assert_eq!(esc.len(), 2 * 4);
        for s in w.targets() {
            assert_eq!(esc.iter().filter(|p| p.start() == s).count(), 4);
        }
        // a cop far from all of U controls nothing
        let near: BTreeSet<Vertex> = w
            .footprint
            .iter()
            .flat_map(|&u| {
                mcgee
                    .bfs_distances(u)
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, d)| d <= 4)
                    .map(|(v, _)| v)
            })
            .collect();
        if let Some(far) = mcgee.vertices().find(|v| !near.contains(v)) {
            assert_eq!(robber.total_controlled(&w, &[far]), 0);
            match robber.strategy_step(&w, &[far]) {
                StrategyOutcome::Moved { path, next } => {
                    assert_eq!(path.end(), w.targets().next().unwrap());
                    robber.validate_witness(&next, &[far]).unwrap();
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn cop_inside_footprint_is_reported() {
        let mcgee = catalog::build("mcgee").unwrap();
        let robber = EvasionRobber::new(&mcgee, BoundParams::new(2, 2, 2).unwrap()).unwrap();
        let w = robber.find_initial_witness(&[0]).unwrap();
        let inside = *w.footprint.iter().next().unwrap();
        assert_eq!(
            robber.strategy_step(&w, &[inside]),
            StrategyOutcome::PreconditionViolated {
                violation: Violation::CopInFootprint { cop: inside }
            }
        );
        assert!(robber.claim_counts(&w, inside).is_err());
    }

    #[test]
    fn claim_counts_far_cop() {
        let mcgee = catalog::build("mcgee").unwrap();
        let robber = EvasionRobber::new(&mcgee, BoundParams::new(2, 2, 2).unwrap()).unwrap();
        let w = robber.find_initial_witness(&[0]).unwrap();
        let esc = robber.enumerate_escaping_paths(&w);
        let touched: BTreeSet<Vertex> = esc.iter().flat_map(|p| p.vertices().to_vec()).collect();
        let far = mcgee.vertices().find(|&c| {
            !w.footprint.contains(&c) && control_closure(&mcgee, &[c]).is_disjoint(&touched)
        });
        if let Some(c) = far {
            assert_eq!(robber.claim_counts(&w, c).unwrap().total, 0);
        }
        for c in mcgee.vertices().filter(|c| !w.footprint.contains(c)) {
            let counts = robber.claim_counts(&w, c).unwrap();
            assert!(BigInt::from(counts.total) <= counts.bounds.per_cop);
        }
    }
}
