//! Rules of Cops and Robbers against a robber of speed `t`.
//!
//! Cops are placed first, then the robber; afterwards the sides alternate
//! with the cops moving first. A cop moves along at most one edge. The robber
//! follows a path of at most `t` edges that contains no cop-occupied vertex.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Path, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("speed and cop count must be positive (speed {speed}, cops {cops})")]
    BadConfig { speed: usize, cops: usize },
    #[error("expected turn {expected:?}, state is at {actual:?}")]
    WrongTurn { expected: Turn, actual: Turn },
    #[error("rule violation: {0}")]
    RuleViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameConfig {
    pub speed: usize,
    pub cop_count: usize,
}

impl GameConfig {
    pub fn new(speed: usize, cop_count: usize) -> Result<Self, GameError> {
        if speed == 0 || cop_count == 0 {
            return Err(GameError::BadConfig {
                speed,
                cops: cop_count,
            });
        }
        Ok(GameConfig { speed, cop_count })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    RobberPlacement,
    CopsToMove,
    RobberToMove,
    Captured,
}

/// A position of the game. Cop positions form a multiset, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    cops: Vec<Vertex>,
    robber: Option<Vertex>,
    turn: Turn,
    round: usize,
}

impl GameState {
    pub fn cops(&self) -> &[Vertex] {
        &self.cops
    }

    pub fn robber(&self) -> Option<Vertex> {
        self.robber
    }

    pub fn turn(&self) -> Turn {
        self.turn
    }

    /// Number of completed robber moves.
    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_captured(&self) -> bool {
        self.turn == Turn::Captured
    }

    fn robber_on_cop(&self) -> bool {
        self.robber
            .is_some_and(|r| self.cops.binary_search(&r).is_ok())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Actor {
    Cops,
    Robber,
}

/// One move as recorded in a transcript.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "actor", content = "detail", rename_all = "lowercase")]
pub enum MoveRecord {
    /// `(from, to)` for each cop, in the order of the sorted previous
    /// positions.
    Cops(Vec<(Vertex, Vertex)>),
    Robber(Path),
}

impl MoveRecord {
    pub fn actor(&self) -> Actor {
        match self {
            MoveRecord::Cops(_) => Actor::Cops,
            MoveRecord::Robber(_) => Actor::Robber,
        }
    }
}

pub fn canonical(mut cops: Vec<Vertex>) -> Vec<Vertex> {
    cops.sort_unstable();
    cops
}

/// A graph together with the game parameters.
#[derive(Debug, Clone, Copy)]
pub struct Game<'g> {
    graph: &'g Graph,
    config: GameConfig,
}

impl<'g> Game<'g> {
    pub fn new(graph: &'g Graph, config: GameConfig) -> Self {
        Game { graph, config }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn config(&self) -> GameConfig {
        self.config
    }

    fn expect_turn(&self, s: &GameState, expected: Turn) -> Result<(), GameError> {
        if s.turn != expected {
            return Err(GameError::WrongTurn {
                expected,
                actual: s.turn,
            });
        }
        Ok(())
    }

    /// Initial state after the cops have been placed.
    pub fn place_cops(&self, cops: Vec<Vertex>) -> Result<GameState, GameError> {
        if cops.len() != self.config.cop_count {
            return Err(GameError::RuleViolation(format!(
                "expected {} cops, got {}",
                self.config.cop_count,
                cops.len()
            )));
        }
        if let Some(&v) = cops.iter().find(|&&v| v >= self.graph.n()) {
            return Err(GameError::RuleViolation(format!(
                "cop placed on missing vertex {v}"
            )));
        }
        Ok(GameState {
            cops: canonical(cops),
            robber: None,
            turn: Turn::RobberPlacement,
            round: 0,
        })
    }

    pub fn place_robber(&self, s: &GameState, v: Vertex) -> Result<GameState, GameError> {
        self.expect_turn(s, Turn::RobberPlacement)?;
        if v >= self.graph.n() {
            return Err(GameError::RuleViolation(format!(
                "robber placed on missing vertex {v}"
            )));
        }
        let mut next = s.clone();
        next.robber = Some(v);
        next.turn = if next.robber_on_cop() {
            Turn::Captured
        } else {
            Turn::CopsToMove
        };
        Ok(next)
    }

    /// All multisets reachable by moving each cop along at most one edge,
    /// sorted and deduplicated.
    pub fn cop_move_candidates(&self, s: &GameState) -> Result<Vec<Vec<Vertex>>, GameError> {
        self.expect_turn(s, Turn::CopsToMove)?;
        Ok(cop_moves(self.graph, &s.cops))
    }

    pub fn apply_cop_move(
        &self,
        s: &GameState,
        new_cops: Vec<Vertex>,
    ) -> Result<GameState, GameError> {
        self.expect_turn(s, Turn::CopsToMove)?;
        let new_cops = canonical(new_cops);
        if !is_cop_step(self.graph, &s.cops, &new_cops) {
            return Err(GameError::RuleViolation(format!(
                "cops cannot move from {:?} to {:?} in one round",
                s.cops, new_cops
            )));
        }
        let mut next = s.clone();
        next.cops = new_cops;
        next.turn = if next.robber_on_cop() {
            Turn::Captured
        } else {
            Turn::RobberToMove
        };
        Ok(next)
    }

    /// Vertices the robber can end her move on: within distance `speed` of
    /// her position once the cop-occupied vertices are deleted.
    pub fn robber_reachable(&self, s: &GameState) -> Result<Vec<Vertex>, GameError> {
        self.expect_turn(s, Turn::RobberToMove)?;
        let r = s.robber.expect("robber is placed once cops are moving");
        Ok(reachable_within(self.graph, r, &s.cops, self.config.speed))
    }

    pub fn apply_robber_move(&self, s: &GameState, dest: Vertex) -> Result<GameState, GameError> {
        let reach = self.robber_reachable(s)?;
        if reach.binary_search(&dest).is_err() {
            return Err(GameError::RuleViolation(format!(
                "robber cannot reach {dest} from {:?} with speed {} past cops {:?}",
                s.robber, self.config.speed, s.cops
            )));
        }
        let mut next = s.clone();
        next.robber = Some(dest);
        next.turn = Turn::CopsToMove;
        next.round += 1;
        Ok(next)
    }

    /// Applies a robber move given as an explicit path, checking that the
    /// path itself is legal and not just its endpoint.
    pub fn apply_robber_path(&self, s: &GameState, path: &Path) -> Result<GameState, GameError> {
        self.expect_turn(s, Turn::RobberToMove)?;
        let legal = path.is_valid_in(self.graph)
            && Some(path.start()) == s.robber
            && path.len() <= self.config.speed
            && path.vertices().iter().all(|v| s.cops.binary_search(v).is_err());
        if !legal {
            return Err(GameError::RuleViolation(format!(
                "illegal robber path {:?} against cops {:?}",
                path.vertices(),
                s.cops
            )));
        }
        self.apply_robber_move(s, path.end())
    }
}

/// Whether `to` can be obtained from `from` by moving each cop at most one
/// edge. Both slices must be sorted.
pub fn is_cop_step(g: &Graph, from: &[Vertex], to: &[Vertex]) -> bool {
    align_cop_step(g, from, to).is_some()
}

/// Pairs each cop in `from` with a position in `to` at most one edge away,
/// if such a pairing exists.
pub fn align_cop_step(g: &Graph, from: &[Vertex], to: &[Vertex]) -> Option<Vec<(Vertex, Vertex)>> {
    if from.len() != to.len() || to.iter().any(|&v| v >= g.n()) {
        return None;
    }
    fn assign(
        g: &Graph,
        from: &[Vertex],
        to: &[Vertex],
        i: usize,
        used: &mut [bool],
        pairs: &mut Vec<(Vertex, Vertex)>,
    ) -> bool {
        if i == from.len() {
            return true;
        }
        for j in 0..to.len() {
            if !used[j] && (from[i] == to[j] || g.has_edge(from[i], to[j])) {
                used[j] = true;
                pairs.push((from[i], to[j]));
                if assign(g, from, to, i + 1, used, pairs) {
                    return true;
                }
                pairs.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut used = vec![false; to.len()];
    let mut pairs = Vec::with_capacity(from.len());
    assign(g, from, to, 0, &mut used, &mut pairs).then_some(pairs)
}

pub(crate) fn cop_moves(g: &Graph, cops: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new()];
    for &c in cops {
        let options: Vec<Vertex> = std::iter::once(c)
            .chain(g.neighbors(c).iter().copied())
            .collect();
        out = out
            .into_iter()
            .flat_map(|partial| {
                options.iter().map(move |&o| {
                    let mut next = partial.clone();
                    next.push(o);
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<_> = out.into_iter().map(canonical).collect();
    out.sort();
    out.dedup();
    out
}

/// Sorted vertices within distance `speed` of `from` avoiding `blocked`.
pub(crate) fn reachable_within(
    g: &Graph,
    from: Vertex,
    blocked: &[Vertex],
    speed: usize,
) -> Vec<Vertex> {
    let mut dist = vec![usize::MAX; g.n()];
    for &b in blocked {
        dist[b] = 0;
    }
    let mut out = vec![from];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == speed {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}
