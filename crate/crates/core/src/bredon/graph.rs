use crate::error::{Error, Result};
use crate::groups::GroupId;

use super::{BoundaryTerm, Cell, GammaCwDatum, InductionSpec};

/// An edge group with its two endpoint vertices (indices into the vertex
/// list) and the inductions into each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub label: String,
    pub group: GroupId,
    pub source: usize,
    pub target: usize,
    pub source_spec: InductionSpec,
    pub target_spec: InductionSpec,
}

/// A finite graph of finite groups; its Bass–Serre tree is a one-dimensional
/// proper model, so the Bredon complex has one vertex and one edge orbit per
/// vertex and edge of the graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphOfGroupsDatum {
    pub vertices: Vec<(String, GroupId)>,
    pub edges: Vec<GraphEdge>,
}

impl GraphOfGroupsDatum {
    pub fn add_vertex(&mut self, label: impl Into<String>, group: GroupId) -> usize {
        self.vertices.push((label.into(), group));
        self.vertices.len() - 1
    }

    pub fn add_edge(
        &mut self,
        label: impl Into<String>,
        group: GroupId,
        (source, source_spec): (usize, InductionSpec),
        (target, target_spec): (usize, InductionSpec),
    ) {
        self.edges.push(GraphEdge {
            label: label.into(),
            group,
            source,
            target,
            source_spec,
            target_spec,
        });
    }

    /// Edge boundary is `target - source`, each through its induction.
    pub fn to_datum(&self, name: impl Into<String>) -> Result<GammaCwDatum> {
        let vertex = |i: usize, edge: &str| {
            self.vertices
                .get(i)
                .map(|(l, _)| l.clone())
                .ok_or_else(|| Error::UnresolvedLabel {
                    label: format!("vertex #{i} of edge {edge}"),
                    dim: 0,
                })
        };
        let vertices = self
            .vertices
            .iter()
            .map(|(l, g)| Cell::new(l.clone(), g.clone()))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(Cell::new(e.label.clone(), e.group.clone()).with_boundary(vec![
                    BoundaryTerm::new(1, vertex(e.target, &e.label)?, e.target_spec.clone()),
                    BoundaryTerm::new(-1, vertex(e.source, &e.label)?, e.source_spec.clone()),
                ]))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GammaCwDatum::new(name, vec![vertices, edges]))
    }
}
