//! Generators for the two parameterized benzenoid-style graph families.
//!
//! `build_hc(a, b, c)` produces the six-sided hollow coronoid: two concentric
//! cycles (outer `p/q/r` families, inner `s/t/u` families) joined by spoke
//! edges, one hexagonal face per fused ring. `build_sp(a, b, c)` produces the
//! starphene: three ladder-like polyacene arms fused to a central hexagon.
//!
//! Both constructions carry a full `(family, index)` label bijection and can
//! be checked against their closed-form structure profile with
//! [`validate_structure`].

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Family, LabeledGraph, VertexId, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HcParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl HcParams {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self, GeneratorError> {
        if a < 2 || b < 2 || c < 2 {
            return Err(GeneratorError::HcParamsTooSmall(a, b, c));
        }
        Ok(HcParams { a, b, c })
    }

    /// Closed-form structure counts for this parameter choice.
    pub fn profile(&self) -> StructureProfile {
        let (a, b, c) = (self.a as usize, self.b as usize, self.c as usize);
        let s = a + b + c - 3;
        StructureProfile {
            vertex_count: 8 * s,
            edge_count: 10 * s,
            degree_two: 4 * a + 4 * b + 4 * c - 12,
            degree_three: 4 * a + 4 * b + 4 * c - 12,
            outer_cycle_len: Some(4 * a + 4 * b + 4 * c - 6),
            inner_cycle_len: Some(4 * a + 4 * b + 4 * c - 18),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl SpParams {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self, GeneratorError> {
        if a < 1 || b < 1 || c < 1 {
            return Err(GeneratorError::SpParamsTooSmall(a, b, c));
        }
        Ok(SpParams { a, b, c })
    }

    pub fn profile(&self) -> StructureProfile {
        let (a, b, c) = (self.a as usize, self.b as usize, self.c as usize);
        StructureProfile {
            vertex_count: 4 * (a + b + c) - 6,
            edge_count: 5 * (a + b + c) - 9,
            degree_two: 2 * (a + b + c),
            degree_three: 2 * (a + b + c - 3),
            outer_cycle_len: None,
            inner_cycle_len: None,
        }
    }
}

/// Expected structural counts, evaluated from the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_two: usize,
    pub degree_three: usize,
    /// Length of the outer face cycle after spoke deletion (coronoid only).
    pub outer_cycle_len: Option<usize>,
    /// Length of the inner face cycle after spoke deletion (coronoid only).
    pub inner_cycle_len: Option<usize>,
}

#[derive(Error, Debug)]
pub enum GeneratorError {
    #[error("hollow coronoid parameters must satisfy a, b, c >= 2 (got {0}, {1}, {2})")]
    HcParamsTooSmall(u32, u32, u32),
    #[error("starphene parameters must satisfy a, b, c >= 1 (got {0}, {1}, {2})")]
    SpParamsTooSmall(u32, u32, u32),
}

struct GraphBuilder {
    labels: Vec<(VertexId, VertexLabel)>,
    ids: HashMap<VertexLabel, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    fn new() -> Self {
        GraphBuilder {
            labels: Vec::new(),
            ids: HashMap::new(),
            edges: Vec::new(),
        }
    }

    /// Allocates ids for `family` indices `1..=count` in order.
    fn family(&mut self, family: Family, count: u32) {
        for index in 1..=count {
            let label = VertexLabel::new(family, index);
            let id = self.labels.len();
            self.labels.push((id, label));
            self.ids.insert(label, id);
        }
    }

    fn id(&self, family: Family, index: u32) -> VertexId {
        self.ids[&VertexLabel::new(family, index)]
    }

    fn edge(&mut self, a: (Family, u32), b: (Family, u32)) {
        let u = self.id(a.0, a.1);
        let v = self.id(b.0, b.1);
        self.edges.push((u, v));
    }

    /// Adds the path edges `g .. g+1` within one family.
    fn path(&mut self, family: Family, count: u32) {
        for g in 1..count {
            self.edge((family, g), (family, g + 1));
        }
    }

    fn finish(self) -> LabeledGraph {
        let n = self.labels.len();
        let g = LabeledGraph::from_edges(n, &self.edges, &self.labels)
            .expect("generator produced an invalid edge set");
        g.require_connected()
            .expect("generator produced a disconnected graph");
        g
    }
}

/// Builds the hollow coronoid HC(a, b, c).
pub fn build_hc(params: HcParams) -> Result<LabeledGraph, GeneratorError> {
    let HcParams { a, b, c } = HcParams::new(params.a, params.b, params.c)?;
    use Family::*;

    // terminal indices of the outer families and of the inner s-family
    let i = 2 * a - 1;
    let j = 2 * c - 1;
    let k = 2 * b - 1;
    let l = 2 * a - 3;

    let mut gb = GraphBuilder::new();
    gb.family(P1, 2 * a - 1);
    gb.family(P2, 2 * a - 1);
    gb.family(Q1, 2 * c - 1);
    gb.family(Q2, 2 * c - 1);
    gb.family(R1, 2 * b - 1);
    gb.family(R2, 2 * b - 1);
    gb.family(S1, 2 * a - 3);
    gb.family(S2, 2 * a - 3);
    gb.family(T1, 2 * c - 3);
    gb.family(T2, 2 * b - 3);
    gb.family(U1, 2 * b - 3);
    gb.family(U2, 2 * c - 3);

    gb.path(P1, 2 * a - 1);
    gb.path(P2, 2 * a - 1);
    gb.path(Q1, 2 * c - 1);
    gb.path(Q2, 2 * c - 1);
    gb.path(R1, 2 * b - 1);
    gb.path(R2, 2 * b - 1);
    gb.path(S1, 2 * a - 3);
    gb.path(S2, 2 * a - 3);
    gb.path(T1, 2 * c - 3);
    gb.path(T2, 2 * b - 3);
    gb.path(U1, 2 * b - 3);
    gb.path(U2, 2 * c - 3);

    // spokes between even outer and odd inner positions
    for g in 1..a {
        gb.edge((P1, 2 * g), (S1, 2 * g - 1));
        gb.edge((P2, 2 * g), (S2, 2 * g - 1));
    }
    for g in 1..c {
        gb.edge((Q1, 2 * g), (T1, 2 * g - 1));
        gb.edge((Q2, 2 * g), (U2, 2 * g - 1));
    }
    for g in 1..b {
        gb.edge((R1, 2 * g), (U1, 2 * g - 1));
        gb.edge((R2, 2 * g), (T2, 2 * g - 1));
    }

    // twelve connectors closing the outer and inner cycles
    gb.edge((P1, 1), (Q2, 1));
    gb.edge((S1, 1), (U2, 1));
    gb.edge((P1, i), (Q1, 1));
    gb.edge((S1, i - 2), (T1, 1));
    gb.edge((Q1, j), (R1, 1));
    gb.edge((T1, j - 2), (U1, 1));
    gb.edge((R1, k), (P2, i));
    gb.edge((U1, k - 2), (S2, l));
    gb.edge((P2, 1), (R2, k));
    gb.edge((S2, 1), (T2, k - 2));
    gb.edge((R2, 1), (Q2, j));
    gb.edge((T2, 1), (U2, j - 2));

    Ok(gb.finish())
}

/// Builds the starphene SP(a, b, c).
pub fn build_sp(params: SpParams) -> Result<LabeledGraph, GeneratorError> {
    let SpParams { a, b, c } = SpParams::new(params.a, params.b, params.c)?;
    use Family::*;

    let mut gb = GraphBuilder::new();
    gb.family(P1, 2 * b - 1);
    gb.family(P2, 2 * b - 1);
    gb.family(Q1, 2 * c - 1);
    gb.family(Q2, 2 * c - 1);
    gb.family(R1, 2 * a - 1);
    gb.family(R2, 2 * a - 1);

    gb.path(P1, 2 * b - 1);
    gb.path(P2, 2 * b - 1);
    gb.path(Q1, 2 * c - 1);
    gb.path(Q2, 2 * c - 1);
    gb.path(R1, 2 * a - 1);
    gb.path(R2, 2 * a - 1);

    // ladder rungs at odd positions
    for g in 1..=b {
        gb.edge((P1, 2 * g - 1), (P2, 2 * g - 1));
    }
    for g in 1..=c {
        gb.edge((Q1, 2 * g - 1), (Q2, 2 * g - 1));
    }
    for g in 1..=a {
        gb.edge((R1, 2 * g - 1), (R2, 2 * g - 1));
    }

    // the three edges completing the central hexagon
    gb.edge((P1, 1), (R2, 1));
    gb.edge((R1, 1), (Q2, 1));
    gb.edge((Q1, 1), (P2, 1));

    Ok(gb.finish())
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(ValidationCheck {
            name,
            passed,
            detail,
        });
    }
}

/// Checks a graph against a [`StructureProfile`]: vertex/edge counts, degree
/// histogram, connectivity, and (when the profile carries face-cycle lengths)
/// that deleting every outer-inner spoke edge leaves exactly two disjoint
/// cycles of the expected lengths.
pub fn validate_structure(g: &LabeledGraph, profile: &StructureProfile) -> ValidationReport {
    let mut report = ValidationReport { checks: Vec::new() };

    let n = g.vertex_count();
    let m = g.edge_count();
    report.push(
        "vertex_count",
        n == profile.vertex_count,
        format!("expected {}, got {}", profile.vertex_count, n),
    );
    report.push(
        "edge_count",
        m == profile.edge_count,
        format!("expected {}, got {}", profile.edge_count, m),
    );
    report.push("connected", g.is_connected(), String::new());

    let hist = g.degree_histogram();
    let deg2 = hist.get(&2).copied().unwrap_or(0);
    let deg3 = hist.get(&3).copied().unwrap_or(0);
    let others = n - deg2 - deg3;
    report.push(
        "degree_histogram",
        deg2 == profile.degree_two && deg3 == profile.degree_three && others == 0,
        format!(
            "expected {} of degree 2 and {} of degree 3, got {} / {} ({} other)",
            profile.degree_two, profile.degree_three, deg2, deg3, others
        ),
    );

    if let (Some(outer), Some(inner)) = (profile.outer_cycle_len, profile.inner_cycle_len) {
        let (passed, detail) = spoke_deleted_cycles(g, outer, inner);
        report.push("spoke_deleted_cycles", passed, detail);
    }

    report
}

fn is_outer_family(f: Family) -> bool {
    matches!(
        f,
        Family::P1 | Family::P2 | Family::Q1 | Family::Q2 | Family::R1 | Family::R2
    )
}

/// Removes every edge joining an outer-family vertex to an inner-family one
/// and checks that what remains is exactly two cycles of the given lengths.
fn spoke_deleted_cycles(g: &LabeledGraph, outer_len: usize, inner_len: usize) -> (bool, String) {
    let n = g.vertex_count();
    let mut side = Vec::with_capacity(n);
    for v in 0..n {
        match g.label(v) {
            Some(label) => side.push(is_outer_family(label.family)),
            None => return (false, format!("vertex {v} is unlabeled")),
        }
    }

    // adjacency restricted to same-side edges
    let kept: Vec<Vec<VertexId>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| side[w] == side[v])
                .collect()
        })
        .collect();
    if let Some(v) = (0..n).find(|&v| kept[v].len() != 2) {
        return (
            false,
            format!("vertex {v} has spoke-deleted degree {}", kept[v].len()),
        );
    }

    // walk out each component; degree 2 everywhere means each is a cycle
    let mut seen = vec![false; n];
    let mut component_sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut stack = vec![start];
        seen[start] = true;
        let same_side = side[start];
        while let Some(u) = stack.pop() {
            size += 1;
            if side[u] != same_side {
                return (
                    false,
                    "component mixes outer and inner vertices".to_string(),
                );
            }
            for &w in &kept[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        component_sizes.push((same_side, size));
    }

    if component_sizes.len() != 2 {
        return (
            false,
            format!("expected 2 components, got {}", component_sizes.len()),
        );
    }
    let outer_found = component_sizes.iter().find(|(o, _)| *o).map(|&(_, s)| s);
    let inner_found = component_sizes.iter().find(|(o, _)| !*o).map(|&(_, s)| s);
    let ok = outer_found == Some(outer_len) && inner_found == Some(inner_len);
    (
        ok,
        format!(
            "expected outer/inner cycle lengths {outer_len}/{inner_len}, got {outer_found:?}/{inner_found:?}"
        ),
    )
}
