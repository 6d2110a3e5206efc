//! P-graphs: edge-labeled directed bipartite graphs whose vertices alternate
//! between action and observation types. The same structure models both the
//! world and a plan; a plan additionally carries a termination region, a
//! planning problem pairs a world with a goal region.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::cover::Cover;
use crate::sets::{ActSet, ObsSet, StateSet};

pub type VertexId = usize;

pub const MAX_VERTICES: usize = 64;
pub const MAX_ACTIONS: usize = 64;
/// Observation indices are capped below [`ObsSet::EPSILON_BIT`].
pub const MAX_OBSERVATIONS: usize = 62;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VertexKind {
    Action,
    Observation,
}

impl VertexKind {
    pub fn other(self) -> Self {
        match self {
            VertexKind::Action => VertexKind::Observation,
            VertexKind::Observation => VertexKind::Action,
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::Action => write!(f, "action"),
            VertexKind::Observation => write!(f, "observation"),
        }
    }
}

/// An edge label set. Which variant is legal depends on the kind of the
/// source vertex; `validate` reports mismatches instead of making them
/// unrepresentable, so that arbitrary candidate structures can be inspected.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EventSet {
    Actions(ActSet),
    Observations(ObsSet),
}

impl EventSet {
    pub fn is_empty(&self) -> bool {
        match self {
            EventSet::Actions(s) => s.is_empty(),
            EventSet::Observations(s) => s.is_empty(),
        }
    }

    pub fn kind(&self) -> VertexKind {
        match self {
            EventSet::Actions(_) => VertexKind::Action,
            EventSet::Observations(_) => VertexKind::Observation,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub labels: EventSet,
}

/// Event names for the two disjoint identifier spaces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    actions: Vec<String>,
    observations: Vec<String>,
    action_ids: HashMap<String, u32>,
    observation_ids: HashMap<String, u32>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PGraphError {
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("unknown vertex name `{0}`")]
    UnknownVertexName(String),
    #[error("unknown {kind} name `{name}`")]
    UnknownEventName { kind: VertexKind, name: String },
    #[error("duplicate {0} name `{1}`")]
    DuplicateEventName(VertexKind, String),
    #[error("alphabet full: at most {0} {1} identifiers")]
    AlphabetFull(usize, VertexKind),
    #[error("graph full: at most {MAX_VERTICES} vertices")]
    GraphFull,
    #[error("region references vertex {0} outside the graph")]
    RegionOutsideGraph(VertexId),
    #[error("plan edge {edge} references reading {reading} outside the cover (has {blocks} blocks)")]
    UnknownReading { edge: usize, reading: u32, blocks: usize },
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_action(&mut self, name: &str) -> Result<u32, PGraphError> {
        if self.action_ids.contains_key(name) {
            return Err(PGraphError::DuplicateEventName(VertexKind::Action, name.into()));
        }
        if self.actions.len() >= MAX_ACTIONS {
            return Err(PGraphError::AlphabetFull(MAX_ACTIONS, VertexKind::Action));
        }
        let id = self.actions.len() as u32;
        self.actions.push(name.into());
        self.action_ids.insert(name.into(), id);
        Ok(id)
    }

    pub fn add_observation(&mut self, name: &str) -> Result<u32, PGraphError> {
        if self.observation_ids.contains_key(name) {
            return Err(PGraphError::DuplicateEventName(VertexKind::Observation, name.into()));
        }
        if self.observations.len() >= MAX_OBSERVATIONS {
            return Err(PGraphError::AlphabetFull(MAX_OBSERVATIONS, VertexKind::Observation));
        }
        let id = self.observations.len() as u32;
        self.observations.push(name.into());
        self.observation_ids.insert(name.into(), id);
        Ok(id)
    }

    pub fn action_id(&self, name: &str) -> Option<u32> {
        self.action_ids.get(name).copied()
    }

    pub fn observation_id(&self, name: &str) -> Option<u32> {
        self.observation_ids.get(name).copied()
    }

    pub fn action_name(&self, id: u32) -> Option<&str> {
        self.actions.get(id as usize).map(|s| s.as_str())
    }

    pub fn observation_name(&self, id: u32) -> Option<&str> {
        self.observations.get(id as usize).map(|s| s.as_str())
    }

    pub fn num_actions(&self) -> usize {
        self.actions.len()
    }

    pub fn num_observations(&self) -> usize {
        self.observations.len()
    }

    pub fn action_names(&self) -> &[String] {
        &self.actions
    }

    pub fn observation_names(&self) -> &[String] {
        &self.observations
    }

    /// All declared observations as a set.
    pub fn observation_universe(&self) -> ObsSet {
        ObsSet::full(self.observations.len() as u32)
    }

    /// Placeholder alphabet whose observations name the readings of a cover.
    pub fn for_readings(actions: &Alphabet, num_readings: usize) -> Self {
        let mut a = Alphabet::new();
        for name in &actions.actions {
            a.add_action(name).expect("copying a valid alphabet");
        }
        for i in 0..num_readings {
            a.add_observation(&format!("r{i}")).expect("reading cap");
        }
        a
    }

    pub fn obs_set_to_string(&self, set: ObsSet) -> String {
        let mut parts = Vec::new();
        for i in set.iter() {
            if i == ObsSet::EPSILON_BIT {
                parts.push("eps".to_string());
            } else {
                parts.push(
                    self.observation_name(i)
                        .map(|s| s.to_string())
                        .unwrap_or_else(|| format!("y{i}")),
                );
            }
        }
        format!("{{{}}}", parts.join(","))
    }

    pub fn act_set_to_string(&self, set: ActSet) -> String {
        let mut parts = Vec::new();
        for i in set.iter() {
            parts.push(
                self.action_name(i)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("u{i}")),
            );
        }
        format!("{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGraph {
    kinds: Vec<VertexKind>,
    names: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    initial: StateSet,
    alphabet: Alphabet,
    name_ids: HashMap<String, VertexId>,
}

impl PGraph {
    pub fn new(alphabet: Alphabet) -> Self {
        PGraph {
            kinds: Vec::new(),
            names: Vec::new(),
            edges: Vec::new(),
            out: Vec::new(),
            initial: StateSet::EMPTY,
            alphabet,
            name_ids: HashMap::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str, kind: VertexKind) -> Result<VertexId, PGraphError> {
        if self.kinds.len() >= MAX_VERTICES {
            return Err(PGraphError::GraphFull);
        }
        let id = self.kinds.len();
        self.kinds.push(kind);
        self.names.push(name.into());
        self.out.push(Vec::new());
        self.name_ids.insert(name.into(), id);
        Ok(id)
    }

    /// Adds an edge without kind checks; `validate` reports any mismatch.
    pub fn add_edge(&mut self, src: VertexId, dst: VertexId, labels: EventSet) -> Result<usize, PGraphError> {
        if src >= self.kinds.len() {
            return Err(PGraphError::UnknownVertex(src));
        }
        if dst >= self.kinds.len() {
            return Err(PGraphError::UnknownVertex(dst));
        }
        let idx = self.edges.len();
        self.edges.push(Edge { src, dst, labels });
        self.out[src].push(idx);
        Ok(idx)
    }

    pub fn add_action_edge(&mut self, src: VertexId, dst: VertexId, actions: &[u32]) -> Result<usize, PGraphError> {
        self.add_edge(src, dst, EventSet::Actions(ActSet::from_iter(actions.iter().copied())))
    }

    pub fn add_obs_edge(&mut self, src: VertexId, dst: VertexId, observations: &[u32]) -> Result<usize, PGraphError> {
        self.add_edge(src, dst, EventSet::Observations(ObsSet::from_iter(observations.iter().copied())))
    }

    pub fn set_initial(&mut self, initial: StateSet) {
        self.initial = initial;
    }

    pub fn initial(&self) -> StateSet {
        self.initial
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.name_ids.get(name).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> {
        self.out[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.kinds.len()
    }

    pub fn all_vertices(&self) -> StateSet {
        StateSet::full(self.kinds.len() as u32)
    }

    /// Union of action labels on outgoing edges, ignoring observation-typed
    /// label sets (those are validation errors on an action vertex).
    pub fn actions_at(&self, v: VertexId) -> ActSet {
        let mut s = ActSet::EMPTY;
        for e in self.out_edges(v) {
            if let EventSet::Actions(a) = e.labels {
                s = s.union(a);
            }
        }
        s
    }

    /// Union of observation labels on outgoing edges.
    pub fn observations_at(&self, v: VertexId) -> ObsSet {
        let mut s = ObsSet::EMPTY;
        for e in self.out_edges(v) {
            if let EventSet::Observations(o) = e.labels {
                s = s.union(o);
            }
        }
        s
    }

    /// Union of outgoing event labels of the vertex, in the vertex's own
    /// namespace.
    pub fn outgoing_events(&self, v: VertexId) -> Result<EventSet, PGraphError> {
        if v >= self.kinds.len() {
            return Err(PGraphError::UnknownVertex(v));
        }
        Ok(match self.kinds[v] {
            VertexKind::Action => EventSet::Actions(self.actions_at(v)),
            VertexKind::Observation => EventSet::Observations(self.observations_at(v)),
        })
    }

    /// Actions available at every member of the set.
    pub fn common_actions(&self, states: StateSet) -> ActSet {
        let mut common = ActSet::full(self.alphabet.num_actions() as u32);
        for v in states.iter() {
            common = common.inter(self.actions_at(v as VertexId));
        }
        if states.is_empty() {
            ActSet::EMPTY
        } else {
            common
        }
    }

    /// Observations possible at some member of the set.
    pub fn all_observations(&self, states: StateSet) -> ObsSet {
        let mut all = ObsSet::EMPTY;
        for v in states.iter() {
            all = all.union(self.observations_at(v as VertexId));
        }
        all
    }

    /// Nondeterministic successor image under a single action.
    pub fn act_image(&self, states: StateSet, action: u32) -> StateSet {
        let mut image = StateSet::EMPTY;
        for v in states.iter() {
            for e in self.out_edges(v as VertexId) {
                if let EventSet::Actions(a) = e.labels {
                    if a.contains(action) {
                        image.insert(e.dst as u32);
                    }
                }
            }
        }
        image
    }

    /// Successor image when any action in the subset may fire.
    pub fn act_subset_image(&self, states: StateSet, actions: ActSet) -> StateSet {
        let mut image = StateSet::EMPTY;
        for v in states.iter() {
            for e in self.out_edges(v as VertexId) {
                if let EventSet::Actions(a) = e.labels {
                    if a.intersects(actions) {
                        image.insert(e.dst as u32);
                    }
                }
            }
        }
        image
    }

    /// Successor image given that the observed event lies in `obs`.
    pub fn obs_image(&self, states: StateSet, obs: ObsSet) -> StateSet {
        let mut image = StateSet::EMPTY;
        for v in states.iter() {
            for e in self.out_edges(v as VertexId) {
                if let EventSet::Observations(o) = e.labels {
                    if o.intersects(obs) {
                        image.insert(e.dst as u32);
                    }
                }
            }
        }
        image
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if self.kinds[e.src] == self.kinds[e.dst] {
                violations.push(Violation::NonBipartiteEdge {
                    edge: i,
                    src: e.src,
                    dst: e.dst,
                    kind: self.kinds[e.src],
                });
            }
            if e.labels.kind() != self.kinds[e.src] {
                violations.push(Violation::LabelKindMismatch {
                    edge: i,
                    src_kind: self.kinds[e.src],
                    label_kind: e.labels.kind(),
                });
            }
            if e.labels.is_empty() {
                violations.push(Violation::EmptyLabelSet { edge: i });
            }
            match e.labels {
                EventSet::Actions(a) => {
                    for id in a.iter() {
                        if id as usize >= self.alphabet.num_actions() {
                            violations.push(Violation::LabelOutsideAlphabet {
                                edge: i,
                                kind: VertexKind::Action,
                                id,
                            });
                        }
                    }
                }
                EventSet::Observations(o) => {
                    for id in o.iter() {
                        if id as usize >= self.alphabet.num_observations() {
                            violations.push(Violation::LabelOutsideAlphabet {
                                edge: i,
                                kind: VertexKind::Observation,
                                id,
                            });
                        }
                    }
                }
            }
        }
        if self.initial.is_empty() {
            violations.push(Violation::EmptyInitial);
        }
        let mut init_kinds = self.initial.iter().filter_map(|v| {
            if (v as usize) < self.kinds.len() {
                Some(self.kinds[v as usize])
            } else {
                violations.push(Violation::InitialOutsideGraph { vertex: v as usize });
                None
            }
        });
        if let Some(first) = init_kinds.next() {
            if init_kinds.any(|k| k != first) {
                violations.push(Violation::MixedInitial);
            }
        }
        ValidationReport { violations }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NonBipartiteEdge { edge: usize, src: VertexId, dst: VertexId, kind: VertexKind },
    LabelKindMismatch { edge: usize, src_kind: VertexKind, label_kind: VertexKind },
    EmptyLabelSet { edge: usize },
    LabelOutsideAlphabet { edge: usize, kind: VertexKind, id: u32 },
    EmptyInitial,
    MixedInitial,
    InitialOutsideGraph { vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonBipartiteEdge { edge, src, dst, kind } => {
                write!(f, "edge {edge} connects two {kind} vertices ({src} -> {dst})")
            }
            Violation::LabelKindMismatch { edge, src_kind, label_kind } => {
                write!(f, "edge {edge} leaves a {src_kind} vertex but bears {label_kind} labels")
            }
            Violation::EmptyLabelSet { edge } => write!(f, "edge {edge} bears an empty label set"),
            Violation::LabelOutsideAlphabet { edge, kind, id } => {
                write!(f, "edge {edge} bears {kind} identifier {id} outside the declared alphabet")
            }
            Violation::EmptyInitial => write!(f, "initial state set is empty"),
            Violation::MixedInitial => write!(f, "initial states mix action and observation vertices"),
            Violation::InitialOutsideGraph { vertex } => {
                write!(f, "initial state {vertex} is not a vertex of the graph")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid p-graph")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// A world p-graph with a goal region.
#[derive(Clone, Debug)]
pub struct PlanningProblem {
    pub world: PGraph,
    pub goal: StateSet,
}

impl PlanningProblem {
    pub fn new(world: PGraph, goal: StateSet) -> Result<Self, PGraphError> {
        if let Some(v) = goal.iter().find(|&v| v as usize >= world.vertex_count()) {
            return Err(PGraphError::RegionOutsideGraph(v as usize));
        }
        Ok(PlanningProblem { world, goal })
    }
}

/// A plan p-graph with a termination region.
#[derive(Clone, Debug)]
pub struct Plan {
    pub graph: PGraph,
    pub termination: StateSet,
}

impl Plan {
    pub fn new(graph: PGraph, termination: StateSet) -> Result<Self, PGraphError> {
        if let Some(v) = termination.iter().find(|&v| v as usize >= graph.vertex_count()) {
            return Err(PGraphError::RegionOutsideGraph(v as usize));
        }
        Ok(Plan { graph, termination })
    }
}

/// Relabels a plan whose observation edges carry reading indices of `cover`
/// into the observation space, replacing each reading set with the union of
/// the blocks it indexes. Shape, initial set, and termination are unchanged.
pub fn apply_preimage(plan: &Plan, cover: &Cover) -> Result<Plan, PGraphError> {
    let blocks = cover.blocks();
    let mut graph = PGraph::new(Alphabet::for_readings(
        plan.graph.alphabet(),
        // The output labels live in the observation space; reading names no
        // longer apply. Observation names are resolved by the caller when
        // pretty-printing.
        0,
    ));
    graph.alphabet = placeholder_observation_alphabet(plan.graph.alphabet(), cover);
    for v in plan.graph.vertices() {
        graph.add_vertex(plan.graph.name(v), plan.graph.kind(v))?;
    }
    for (i, e) in plan.graph.edges().iter().enumerate() {
        let labels = match e.labels {
            EventSet::Actions(a) => EventSet::Actions(a),
            EventSet::Observations(readings) => {
                let mut union = ObsSet::EMPTY;
                for r in readings.iter() {
                    match blocks.get(r as usize) {
                        Some(b) => union = union.union(*b),
                        None => {
                            return Err(PGraphError::UnknownReading {
                                edge: i,
                                reading: r,
                                blocks: blocks.len(),
                            })
                        }
                    }
                }
                EventSet::Observations(union)
            }
        };
        graph.add_edge(e.src, e.dst, labels)?;
    }
    graph.set_initial(plan.graph.initial());
    Plan::new(graph, plan.termination)
}

fn placeholder_observation_alphabet(actions: &Alphabet, cover: &Cover) -> Alphabet {
    let mut a = Alphabet::new();
    for name in actions.action_names() {
        a.add_action(name).expect("copying a valid alphabet");
    }
    let max = cover.domain().iter().filter(|&i| i != ObsSet::EPSILON_BIT).max();
    if let Some(max) = max {
        for i in 0..=max {
            a.add_observation(&format!("y{i}")).expect("observation cap");
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vertex_world() -> PGraph {
        let mut alpha = Alphabet::new();
        let mv = alpha.add_action("move").unwrap();
        alpha.add_observation("seen").unwrap();
        let mut g = PGraph::new(alpha);
        let a = g.add_vertex("a", VertexKind::Action).unwrap();
        let o = g.add_vertex("o", VertexKind::Observation).unwrap();
        g.add_action_edge(a, o, &[mv]).unwrap();
        g.set_initial(StateSet::singleton(a as u32));
        g
    }

    #[test]
    fn valid_two_vertex_graph() {
        let g = two_vertex_world();
        assert!(g.validate().is_empty());
    }

    #[test]
    fn edge_between_observation_vertices_is_reported() {
        let mut alpha = Alphabet::new();
        alpha.add_observation("y").unwrap();
        let mut g = PGraph::new(alpha);
        let o1 = g.add_vertex("o1", VertexKind::Observation).unwrap();
        let o2 = g.add_vertex("o2", VertexKind::Observation).unwrap();
        g.add_obs_edge(o1, o2, &[0]).unwrap();
        g.set_initial(StateSet::singleton(o1 as u32));
        let report = g.validate();
        let bipartite: Vec<_> = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::NonBipartiteEdge { .. }))
            .collect();
        assert_eq!(bipartite.len(), 1);
    }

    #[test]
    fn self_loop_is_a_bipartite_violation() {
        let mut alpha = Alphabet::new();
        alpha.add_action("u").unwrap();
        let mut g = PGraph::new(alpha);
        let a = g.add_vertex("a", VertexKind::Action).unwrap();
        g.add_action_edge(a, a, &[0]).unwrap();
        g.set_initial(StateSet::singleton(0));
        assert!(!g.validate().is_empty());
    }

    #[test]
    fn outgoing_events_unions_labels() {
        let mut alpha = Alphabet::new();
        let f = alpha.add_action("f").unwrap();
        let b = alpha.add_action("b").unwrap();
        alpha.add_observation("y").unwrap();
        let mut g = PGraph::new(alpha);
        let a = g.add_vertex("a", VertexKind::Action).unwrap();
        let o1 = g.add_vertex("o1", VertexKind::Observation).unwrap();
        let o2 = g.add_vertex("o2", VertexKind::Observation).unwrap();
        g.add_action_edge(a, o1, &[f]).unwrap();
        g.add_action_edge(a, o2, &[b]).unwrap();
        g.set_initial(StateSet::singleton(a as u32));
        assert_eq!(
            g.outgoing_events(a).unwrap(),
            EventSet::Actions(ActSet::from_iter([f, b]))
        );
        // No outgoing edges: empty set.
        assert_eq!(
            g.outgoing_events(o1).unwrap(),
            EventSet::Observations(ObsSet::EMPTY)
        );
        assert!(matches!(g.outgoing_events(99), Err(PGraphError::UnknownVertex(99))));
    }

    fn reading_plan(readings: &[&[u32]], num_readings: usize) -> Plan {
        let mut alpha = Alphabet::new();
        alpha.add_action("go").unwrap();
        for i in 0..num_readings {
            alpha.add_observation(&format!("r{i}")).unwrap();
        }
        let mut g = PGraph::new(alpha);
        let o = g.add_vertex("p0", VertexKind::Observation).unwrap();
        for (i, r) in readings.iter().enumerate() {
            let a = g.add_vertex(&format!("p{}", i + 1), VertexKind::Action).unwrap();
            g.add_obs_edge(o, a, r).unwrap();
        }
        g.set_initial(StateSet::singleton(o as u32));
        Plan::new(g, StateSet::EMPTY).unwrap()
    }

    #[test]
    fn preimage_replaces_readings_with_block_unions() {
        // Single block {y1,y2}; an edge labeled with reading 0 becomes {y1,y2}.
        let cover = Cover::new([ObsSet::from_iter([1, 2])]).unwrap();
        let plan = reading_plan(&[&[0]], 1);
        let out = apply_preimage(&plan, &cover).unwrap();
        assert_eq!(
            out.graph.edges()[0].labels,
            EventSet::Observations(ObsSet::from_iter([1, 2]))
        );
        assert_eq!(out.graph.vertex_count(), plan.graph.vertex_count());
        assert_eq!(out.graph.edges().len(), plan.graph.edges().len());
        assert_eq!(out.graph.initial(), plan.graph.initial());
    }

    #[test]
    fn preimage_under_identity_cover_renames_only() {
        // All-singleton cover: reading i <-> observation i.
        let cover = Cover::new([ObsSet::singleton(0), ObsSet::singleton(1)]).unwrap();
        let plan = reading_plan(&[&[0], &[1]], 2);
        let out = apply_preimage(&plan, &cover).unwrap();
        assert_eq!(
            out.graph.edges()[0].labels,
            EventSet::Observations(ObsSet::singleton(0))
        );
        assert_eq!(
            out.graph.edges()[1].labels,
            EventSet::Observations(ObsSet::singleton(1))
        );
    }

    #[test]
    fn preimage_unions_overlapping_blocks() {
        // Blocks {a,b} and {b,c} (a=0, b=1, c=2); readings {0,1} -> {a,b,c}.
        let cover = Cover::new([ObsSet::from_iter([0, 1]), ObsSet::from_iter([1, 2])]).unwrap();
        let plan = reading_plan(&[&[0, 1]], 2);
        let out = apply_preimage(&plan, &cover).unwrap();
        assert_eq!(
            out.graph.edges()[0].labels,
            EventSet::Observations(ObsSet::from_iter([0, 1, 2]))
        );
        // Labels stay within the cover's domain.
        assert!(ObsSet::from_iter([0, 1, 2]).is_subset(cover.domain()));
    }

    #[test]
    fn preimage_rejects_unknown_reading() {
        let cover = Cover::new([ObsSet::singleton(0)]).unwrap();
        let plan = reading_plan(&[&[3]], 4);
        assert!(matches!(
            apply_preimage(&plan, &cover),
            Err(PGraphError::UnknownReading { reading: 3, .. })
        ));
    }
}
