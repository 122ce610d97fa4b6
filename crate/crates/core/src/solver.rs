//! Exact cop numbers by backward induction over the full state space.
//!
//! The cops' winning region is the least fixed point containing every
//! capture state, closed under "some cop move reaches it" for cop-to-move
//! states and "every robber move reaches it" for robber-to-move states. It is
//! computed as an attractor: a worklist of newly winning states plus, for
//! each robber-to-move state, a counter of successors not yet known to be
//! winning.
//!
//! Both move relations are symmetric (a cop step can be undone by a cop
//! step, and distance in the cop-deleted graph is symmetric), so the
//! predecessors of a state are found by enumerating its successors.

use serde::Serialize;
use thiserror::Error;

use crate::game::{cop_moves, reachable_within};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_STATE_CAP: u64 = 50_000_000;

/// Environment variable overriding [`SolverConfig::state_cap`].
pub const STATE_CAP_ENV: &str = "PURSUIT_STATE_CAP";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("state space of about {estimate} states exceeds the cap of {cap}")]
    StateCap { estimate: u128, cap: u64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("cop count and speed must be positive")]
    BadParameters,
    #[error("invalid {STATE_CAP_ENV} value `{0}`")]
    BadCapEnv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub state_cap: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

impl SolverConfig {
    /// Default configuration with the cap taken from `PURSUIT_STATE_CAP`
    /// when set.
    pub fn from_env() -> Result<Self, SolverError> {
        match std::env::var(STATE_CAP_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map(|state_cap| SolverConfig { state_cap })
                .map_err(|_| SolverError::BadCapEnv(raw)),
            Err(_) => Ok(SolverConfig::default()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub cop_win: bool,
    pub k: usize,
    pub visited_states: u64,
    pub iterations: u64,
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of indexed states: cop multisets × robber vertex × side to move.
pub fn state_count(n: usize, k: usize) -> u128 {
    binomial((n + k - 1) as u128, k as u128)
        .saturating_mul(n as u128)
        .saturating_mul(2)
}

/// Dense ranking of sorted cop multisets of size `k` over `0..n`.
///
/// A multiset `c_0 <= .. <= c_{k-1}` maps to the strictly increasing
/// combination `b_i = c_i + i`, ranked in colexicographic order.
#[derive(Debug, Clone)]
pub struct MultisetIndex {
    k: usize,
    binom: Vec<Vec<u64>>,
    members: Vec<Vec<Vertex>>,
}

impl MultisetIndex {
    pub fn new(n: usize, k: usize) -> Self {
        let top = n + k;
        let mut binom = vec![vec![0u64; k + 2]; top + 1];
        for (a, row) in binom.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = binomial(a as u128, b as u128) as u64;
            }
        }
        let total = binomial((n + k - 1) as u128, k as u128) as usize;
        let mut idx = MultisetIndex {
            k,
            binom,
            members: vec![Vec::new(); total],
        };
        let mut current = vec![0; k];
        idx.fill(n, 0, 0, &mut current);
        idx
    }

    fn fill(&mut self, n: usize, pos: usize, lo: Vertex, current: &mut Vec<Vertex>) {
        if pos == self.k {
            let r = self.rank(current);
            self.members[r] = current.clone();
            return;
        }
        for v in lo..n {
            current[pos] = v;
            self.fill(n, pos + 1, v, current);
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rank(&self, sorted: &[Vertex]) -> usize {
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c + i][i + 1] as usize)
            .sum()
    }

    pub fn unrank(&self, r: usize) -> &[Vertex] {
        &self.members[r]
    }
}

/// Winning region of the cops, indexed by `(multiset, robber)`.
struct Attractor {
    cops_turn: Vec<bool>,
    iterations: u64,
}

fn solve_region(g: &Graph, idx: &MultisetIndex, speed: usize) -> Attractor {
    let n = g.n();
    let total = idx.len() * n;
    let at = |c: usize, r: Vertex| c * n + r;
    let occupied = |c: usize, r: Vertex| idx.unrank(c).binary_search(&r).is_ok();

    let moves: Vec<Vec<usize>> = (0..idx.len())
        .map(|c| {
            cop_moves(g, idx.unrank(c))
                .iter()
                .map(|m| idx.rank(m))
                .collect()
        })
        .collect();

    let mut cops_turn = vec![false; total];
    let mut robber_turn = vec![false; total];
    let mut pending = vec![0u32; total];

    // (state, is_robber_turn)
    let mut frontier: Vec<(usize, bool)> = Vec::new();
    for c in 0..idx.len() {
        let cops = idx.unrank(c);
        for r in 0..n {
            let s = at(c, r);
            if occupied(c, r) {
                cops_turn[s] = true;
                robber_turn[s] = true;
                frontier.push((s, false));
                frontier.push((s, true));
            } else {
                pending[s] = reachable_within(g, r, cops, speed).len() as u32;
            }
        }
    }

    let mut iterations = 0;
    while !frontier.is_empty() {
        iterations += 1;
        let mut next = Vec::new();
        for (s, robber_side) in frontier {
            let (c, r) = (s / n, s % n);
            if robber_side {
                // cop-to-move predecessors: any multiset one cop step away
                for &c_prev in &moves[c] {
                    let p = at(c_prev, r);
                    if !cops_turn[p] {
                        cops_turn[p] = true;
                        next.push((p, false));
                    }
                }
            } else if !occupied(c, r) {
                // robber-to-move predecessors: robber positions that can reach r
                for r_prev in reachable_within(g, r, idx.unrank(c), speed) {
                    let p = at(c, r_prev);
                    if robber_turn[p] {
                        continue;
                    }
                    pending[p] -= 1;
                    if pending[p] == 0 {
                        robber_turn[p] = true;
                        next.push((p, true));
                    }
                }
            }
        }
        frontier = next;
    }
    Attractor {
        cops_turn,
        iterations,
    }
}

/// Decides whether `k` cops catch a robber of speed `t` on `g`.
pub fn cops_win_with(
    g: &Graph,
    k: usize,
    t: usize,
    config: &SolverConfig,
) -> Result<SolveReport, SolverError> {
    if k == 0 || t == 0 {
        return Err(SolverError::BadParameters);
    }
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let estimate = state_count(g.n(), k);
    if estimate > config.state_cap as u128 {
        return Err(SolverError::StateCap {
            estimate,
            cap: config.state_cap,
        });
    }
    let idx = MultisetIndex::new(g.n(), k);
    let region = solve_region(g, &idx, t);
    let n = g.n();
    // placement: some initial multiset wins against every robber placement
    let cop_win = (0..idx.len()).any(|c| (0..n).all(|v| region.cops_turn[c * n + v]));
    Ok(SolveReport {
        cop_win,
        k,
        visited_states: estimate as u64,
        iterations: region.iterations,
    })
}

/// Smallest `k <= k_max` for which the cops win, if any.
pub fn cop_number(
    g: &Graph,
    t: usize,
    k_max: usize,
    config: &SolverConfig,
) -> Result<Option<usize>, SolverError> {
    for k in 1..=k_max {
        if cops_win_with(g, k, t, config)?.cop_win {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
