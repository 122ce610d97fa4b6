//! Simulation harness: cop policies against the evasion strategy, with
//! JSON transcripts that can be replayed through the game rules.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`), seeded with the spec's
//! 64-bit seed; cop `i` draws from stream `i`, so runs are reproducible
//! across platforms.

use std::collections::VecDeque;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{self, CatalogError};
use crate::game::{align_cop_step, Game, GameConfig, GameError, GameState, MoveRecord, Turn};
use crate::graph::{Graph, GraphError, Vertex};
use crate::strategy::{BoundParams, EvasionRobber, SafeWitness, StrategyError, StrategyOutcome};

/// Version written into every transcript.
pub const TRANSCRIPT_VERSION: &str = "1.0";

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("invalid simulation spec: {0}")]
    BadSpec(String),
    #[error("robber finds no safe starting vertex against cops at {0:?}")]
    NoInitialWitness(Vec<Vertex>),
    #[error("cop controller failed: {0}")]
    Controller(String),
    #[error("replay diverged at record {index}: {message}")]
    Replay { index: usize, message: String },
}

/// Where a graph comes from: `catalog:<name>` names a catalog entry, any
/// other string is a path to an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Catalog(String),
    File(PathBuf),
}

impl GraphSource {
    pub fn parse(raw: &str) -> Self {
        match raw.strip_prefix("catalog:") {
            Some(name) => GraphSource::Catalog(name.to_string()),
            None => GraphSource::File(PathBuf::from(raw)),
        }
    }

    pub fn load(&self) -> Result<Graph, SimError> {
        match self {
            GraphSource::Catalog(name) => Ok(catalog::build(name)?),
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| SimError::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                Ok(Graph::parse_edge_list(&text)?)
            }
        }
    }
}

pub fn load_graph(raw: &str) -> Result<Graph, SimError> {
    GraphSource::parse(raw).load()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CopStrategy {
    Stationary,
    Random,
    Greedy,
    Script,
    Human,
}

impl std::str::FromStr for CopStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stationary" => Ok(CopStrategy::Stationary),
            "random" => Ok(CopStrategy::Random),
            "greedy" => Ok(CopStrategy::Greedy),
            "script" => Ok(CopStrategy::Script),
            "human" => Ok(CopStrategy::Human),
            other => Err(format!(
                "unknown cop strategy `{other}` (stationary, random, greedy, script, human)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationSpec {
    /// `catalog:<name>` or an edge-list path.
    pub graph: String,
    pub speed: usize,
    pub cop_count: usize,
    pub cop_strategy: CopStrategy,
    pub max_rounds: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Witness size; defaults to `floor(d^t / 2)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    /// Initial cop vertices; defaults to every cop on vertex 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial_cops: Option<Vec<Vertex>>,
    /// Cop positions for each round of the `script` strategy. Once exhausted
    /// the cops stay put.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub script: Option<Vec<Vec<Vertex>>>,
}

impl SimulationSpec {
    pub fn new(graph: impl Into<String>, speed: usize, cop_count: usize) -> Self {
        SimulationSpec {
            graph: graph.into(),
            speed,
            cop_count,
            cop_strategy: CopStrategy::Greedy,
            max_rounds: 100,
            seed: None,
            m: None,
            initial_cops: None,
            script: None,
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if self.max_rounds == 0 {
            return Err(SimError::BadSpec("max_rounds must be at least 1".into()));
        }
        if self.cop_strategy == CopStrategy::Random && self.seed.is_none() {
            return Err(SimError::BadSpec("random cops need a seed".into()));
        }
        if self.cop_strategy == CopStrategy::Script && self.script.is_none() {
            return Err(SimError::BadSpec("script cops need a script".into()));
        }
        GameConfig::new(self.speed, self.cop_count)?;
        Ok(())
    }

    fn initial_cops(&self) -> Vec<Vertex> {
        self.initial_cops
            .clone()
            .unwrap_or_else(|| vec![0; self.cop_count])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placements {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    RobberSurvived { rounds: usize },
    Captured { round: usize },
    StrategyFailure { outcome: StrategyOutcome },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub version: String,
    pub spec: SimulationSpec,
    pub placements: Placements,
    pub rounds: Vec<MoveRecord>,
    pub verdict: Verdict,
}

impl Transcript {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcripts serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Decides where the cops go each round.
pub trait CopPolicy {
    /// New cop positions, aligned with the sorted current positions.
    fn step(&mut self, game: &Game<'_>, state: &GameState) -> Result<Vec<Vertex>, SimError>;
}

/// Each cop steps to the neighbour closest to the robber, smallest id on
/// ties, or onto the robber when adjacent. `rng` is unused.
pub fn greedy_cop_move<R: Rng>(g: &Graph, state: &GameState, _rng: &mut R) -> Vec<Vertex> {
    let robber = state.robber().expect("robber is placed");
    let dist = g.bfs_distances(robber);
    state
        .cops()
        .iter()
        .map(|&c| {
            g.neighbors(c)
                .iter()
                .copied()
                .filter(|&w| dist[w] < dist[c])
                .min_by_key(|&w| (dist[w], w))
                .unwrap_or(c)
        })
        .collect()
}

struct Stationary;

impl CopPolicy for Stationary {
    fn step(&mut self, _: &Game<'_>, state: &GameState) -> Result<Vec<Vertex>, SimError> {
        Ok(state.cops().to_vec())
    }
}

struct Greedy(ChaCha8Rng);

impl CopPolicy for Greedy {
    fn step(&mut self, game: &Game<'_>, state: &GameState) -> Result<Vec<Vertex>, SimError> {
        Ok(greedy_cop_move(game.graph(), state, &mut self.0))
    }
}

/// Every cop picks uniformly from its closed neighbourhood using its own
/// stream.
struct RandomWalk(Vec<ChaCha8Rng>);

impl RandomWalk {
    fn new(seed: u64, cops: usize) -> Self {
        RandomWalk(
            (0..cops)
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(i as u64);
                    rng
                })
                .collect(),
        )
    }
}

impl CopPolicy for RandomWalk {
    fn step(&mut self, game: &Game<'_>, state: &GameState) -> Result<Vec<Vertex>, SimError> {
        let g = game.graph();
        Ok(state
            .cops()
            .iter()
            .zip(self.0.iter_mut())
            .map(|(&c, rng)| {
                let pick = rng.gen_range(0..=g.degree(c));
                if pick == 0 {
                    c
                } else {
                    g.neighbors(c)[pick - 1]
                }
            })
            .collect())
    }
}

struct Scripted(VecDeque<Vec<Vertex>>);

impl CopPolicy for Scripted {
    fn step(&mut self, game: &Game<'_>, state: &GameState) -> Result<Vec<Vertex>, SimError> {
        let Some(target) = self.0.pop_front() else {
            return Ok(state.cops().to_vec());
        };
        let mut sorted = target.clone();
        sorted.sort_unstable();
        align_cop_step(game.graph(), state.cops(), &sorted)
            .map(|pairs| pairs.into_iter().map(|(_, to)| to).collect())
            .ok_or_else(|| {
                SimError::Controller(format!(
                    "script move {target:?} is not one cop step from {:?}",
                    state.cops()
                ))
            })
    }
}

/// Builds the policy named by the spec; `human` needs an interactive
/// controller and is rejected here.
pub fn policy_for(spec: &SimulationSpec) -> Result<Box<dyn CopPolicy>, SimError> {
    let seed = spec.seed.unwrap_or(0);
    Ok(match spec.cop_strategy {
        CopStrategy::Stationary => Box::new(Stationary),
        CopStrategy::Greedy => Box::new(Greedy(ChaCha8Rng::seed_from_u64(seed))),
        CopStrategy::Random => Box::new(RandomWalk::new(seed, spec.cop_count)),
        CopStrategy::Script => Box::new(Scripted(
            spec.script.clone().unwrap_or_default().into_iter().collect(),
        )),
        CopStrategy::Human => {
            return Err(SimError::BadSpec(
                "the human strategy needs an interactive controller".into(),
            ))
        }
    })
}

/// What the robber saw and did in one round.
#[derive(Debug, Clone)]
pub struct StepView<'a> {
    pub round: usize,
    pub witness: &'a SafeWitness,
    pub cops: &'a [Vertex],
    pub outcome: &'a StrategyOutcome,
}

fn strategy_params(g: &Graph, spec: &SimulationSpec) -> Result<BoundParams, SimError> {
    let degree = g
        .is_regular()
        .ok_or(StrategyError::NotRegular { expected: 0 })?;
    let params = match spec.m {
        Some(m) => BoundParams::new(degree.saturating_sub(1) as u64, spec.speed as u64, m)?,
        None => BoundParams::half_alpha(degree, spec.speed)?,
    };
    Ok(params)
}

pub fn run_simulation(spec: &SimulationSpec) -> Result<Transcript, SimError> {
    spec.validate()?;
    let g = load_graph(&spec.graph)?;
    let mut policy = policy_for(spec)?;
    run_with_policy(spec, &g, policy.as_mut(), |_| {})
}

/// Plays `policy` against the evasion strategy on `g`, reporting every
/// robber decision to `observe`.
pub fn run_with_policy(
    spec: &SimulationSpec,
    g: &Graph,
    policy: &mut dyn CopPolicy,
    mut observe: impl FnMut(StepView<'_>),
) -> Result<Transcript, SimError> {
    spec.validate()?;
    let params = strategy_params(g, spec)?;
    let robber = EvasionRobber::new(g, params)?;
    let game = Game::new(g, GameConfig::new(spec.speed, spec.cop_count)?);

    let mut state = game.place_cops(spec.initial_cops())?;
    let mut witness = robber
        .find_initial_witness(state.cops())
        .ok_or_else(|| SimError::NoInitialWitness(state.cops().to_vec()))?;
    state = game.place_robber(&state, witness.robber)?;
    let placements = Placements {
        cops: state.cops().to_vec(),
        robber: witness.robber,
    };

    let mut rounds = Vec::new();
    let verdict = loop {
        if state.round() >= spec.max_rounds {
            break Verdict::RobberSurvived {
                rounds: state.round(),
            };
        }
        let targets = policy.step(&game, &state)?;
        if targets.len() != state.cops().len() {
            return Err(SimError::Controller(format!(
                "policy moved {} cops, expected {}",
                targets.len(),
                state.cops().len()
            )));
        }
        let pairs: Vec<_> = state.cops().iter().copied().zip(targets.iter().copied()).collect();
        state = game.apply_cop_move(&state, targets)?;
        rounds.push(MoveRecord::Cops(pairs));
        if state.is_captured() {
            break Verdict::Captured {
                round: state.round(),
            };
        }

        let mut outcome = robber.strategy_step(&witness, state.cops());
        if let StrategyOutcome::Moved { next, .. } = &outcome {
            if let Err(violation) = robber.validate_witness(next, state.cops()) {
                outcome = StrategyOutcome::PreconditionViolated { violation };
            }
        }
        observe(StepView {
            round: state.round(),
            witness: &witness,
            cops: state.cops(),
            outcome: &outcome,
        });
        match outcome {
            StrategyOutcome::Moved { path, next } => {
                state = game.apply_robber_path(&state, &path)?;
                rounds.push(MoveRecord::Robber(path));
                witness = next;
            }
            failure => break Verdict::StrategyFailure { outcome: failure },
        }
    };

    Ok(Transcript {
        version: TRANSCRIPT_VERSION.to_string(),
        spec: spec.clone(),
        placements,
        rounds,
        verdict,
    })
}

/// Re-applies every record of `t` through the game rules on `g` and
/// re-derives the verdict. Robber moves are also checked against the
/// evasion strategy, which is deterministic given the cop moves.
pub fn replay(t: &Transcript, g: &Graph) -> Result<Verdict, SimError> {
    let diverged = |index: usize, message: String| SimError::Replay { index, message };
    let spec = &t.spec;
    let game = Game::new(g, GameConfig::new(spec.speed, spec.cop_count)?);
    let robber = EvasionRobber::new(g, strategy_params(g, spec)?)?;

    let mut state = game.place_cops(t.placements.cops.clone())?;
    let mut witness = robber
        .find_initial_witness(state.cops())
        .ok_or_else(|| SimError::NoInitialWitness(state.cops().to_vec()))?;
    if witness.robber != t.placements.robber {
        return Err(diverged(
            0,
            format!(
                "robber placed at {}, strategy picks {}",
                t.placements.robber, witness.robber
            ),
        ));
    }
    state = game.place_robber(&state, t.placements.robber)?;

    for (index, record) in t.rounds.iter().enumerate() {
        match (record, state.turn()) {
            (MoveRecord::Cops(pairs), Turn::CopsToMove) => {
                let mut from: Vec<Vertex> = pairs.iter().map(|p| p.0).collect();
                from.sort_unstable();
                if from != state.cops() {
                    return Err(diverged(index, format!("cops recorded at {from:?}, state has {:?}", state.cops())));
                }
                if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a != b && !g.has_edge(a, b)) {
                    return Err(diverged(index, format!("cop cannot step {a} -> {b}")));
                }
                let to = pairs.iter().map(|p| p.1).collect();
                state = game
                    .apply_cop_move(&state, to)
                    .map_err(|e| diverged(index, e.to_string()))?;
            }
            (MoveRecord::Robber(path), Turn::RobberToMove) => {
                let expected = robber.strategy_step(&witness, state.cops());
                match expected {
                    StrategyOutcome::Moved { path: p, next } if &p == path => witness = next,
                    other => {
                        return Err(diverged(
                            index,
                            format!("robber moved along {path:?}, strategy says {other:?}"),
                        ))
                    }
                }
                state = game
                    .apply_robber_path(&state, path)
                    .map_err(|e| diverged(index, e.to_string()))?;
            }
            (_, turn) => {
                return Err(diverged(
                    index,
                    format!("{:?} record while state is at {turn:?}", record.actor()),
                ))
            }
        }
    }

    let end = t.rounds.len();
    let verdict = match state.turn() {
        Turn::Captured => Verdict::Captured {
            round: state.round(),
        },
        Turn::RobberToMove => {
            let mut outcome = robber.strategy_step(&witness, state.cops());
            if let StrategyOutcome::Moved { next, .. } = &outcome {
                match robber.validate_witness(next, state.cops()) {
                    Ok(()) => return Err(diverged(end, "transcript stops before a legal robber move".into())),
                    Err(violation) => outcome = StrategyOutcome::PreconditionViolated { violation },
                }
            }
            Verdict::StrategyFailure { outcome }
        }
        Turn::CopsToMove if state.round() >= spec.max_rounds => Verdict::RobberSurvived {
            rounds: state.round(),
        },
        turn => return Err(diverged(end, format!("transcript ends at {turn:?}"))),
    };
    if verdict != t.verdict {
        return Err(diverged(
            end,
            format!("recorded verdict {:?}, replay reaches {verdict:?}", t.verdict),
        ));
    }
    Ok(verdict)
}
