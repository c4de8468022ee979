use crate::error::{Error, Result};
use crate::fuchsian::Signature;
use crate::groups::GroupId;

use super::{BoundaryTerm, Cell, GammaCwDatum, GraphOfGroupsDatum, InductionSpec};

fn cyclic(m: u64) -> GroupId {
    GroupId::Cyclic(m).canonical()
}

/// Cell structure of the hyperbolic plane for a cocompact signature: a free
/// vertex `z`, cone vertices `x1..xr`, edges `a1..a2g` and `y1..yr`, and one
/// free face `w`.
pub fn fuchsian_cocompact_datum(sig: &Signature) -> Result<GammaCwDatum> {
    if !sig.is_cocompact() {
        return Err(Error::InvalidSignature(format!("{sig} has punctures")));
    }
    let mut vertices = vec![Cell::new("z", GroupId::Trivial)];
    let mut edges = Vec::new();
    let mut face = Vec::new();
    for i in 1..=2 * sig.genus {
        let a = format!("a{i}");
        edges.push(Cell::new(&a, GroupId::Trivial).with_boundary(vec![
            BoundaryTerm::new(1, "z", InductionSpec::Identity),
            BoundaryTerm::new(-1, "z", InductionSpec::Identity),
        ]));
        face.push(BoundaryTerm::new(1, &a, InductionSpec::Identity));
        face.push(BoundaryTerm::new(-1, &a, InductionSpec::Identity));
    }
    for (j, &m) in sig.periods.iter().enumerate() {
        let (x, y) = (format!("x{}", j + 1), format!("y{}", j + 1));
        vertices.push(Cell::new(&x, cyclic(m)));
        edges.push(Cell::new(&y, GroupId::Trivial).with_boundary(vec![
            BoundaryTerm::new(1, &x, InductionSpec::FromTrivial(cyclic(m))),
            BoundaryTerm::new(-1, "z", InductionSpec::Identity),
        ]));
        face.push(BoundaryTerm::new(1, &y, InductionSpec::Identity));
        face.push(BoundaryTerm::new(-1, &y, InductionSpec::Identity));
    }
    let w = Cell::new("w", GroupId::Trivial).with_boundary(face);
    Ok(GammaCwDatum::new(format!("fuchsian {sig}"), vec![vertices, edges, vec![w]]))
}

/// One free vertex carrying `2g+s-1` loops, with a pendant edge to a
/// `Z_mj` vertex for each period.
pub fn noncocompact_graph(sig: &Signature) -> Result<GraphOfGroupsDatum> {
    if sig.is_cocompact() {
        return Err(Error::InvalidSignature(format!("{sig} has no punctures")));
    }
    let mut g = GraphOfGroupsDatum::default();
    let z = g.add_vertex("z", GroupId::Trivial);
    add_loops(&mut g, sig, z, GroupId::Trivial);
    for (j, &m) in sig.periods.iter().enumerate() {
        let x = g.add_vertex(format!("x{}", j + 1), cyclic(m));
        g.add_edge(
            format!("d{}", j + 1),
            GroupId::Trivial,
            (z, InductionSpec::Identity),
            (x, InductionSpec::FromTrivial(cyclic(m))),
        );
    }
    Ok(g)
}

fn add_loops(g: &mut GraphOfGroupsDatum, sig: &Signature, z: usize, group: GroupId) {
    let loops = (1..=2 * sig.genus)
        .map(|i| format!("a{i}"))
        .chain((1..sig.punctures).map(|k| format!("c{k}")));
    for label in loops {
        g.add_edge(
            label,
            group.clone(),
            (z, InductionSpec::Identity),
            (z, InductionSpec::Identity),
        );
    }
}

pub fn fuchsian_noncocompact_datum(sig: &Signature) -> Result<GammaCwDatum> {
    noncocompact_graph(sig)?.to_datum(format!("fuchsian {sig}"))
}

/// The same graph with every group extended by a central `Z2`: free
/// vertices and all edges become `Z2`, cone vertices `Z4` or `Z6`.
pub fn lifted_graph(sig: &Signature) -> Result<GraphOfGroupsDatum> {
    if sig.is_cocompact() {
        return Err(Error::InvalidSignature(format!("{sig} has no punctures")));
    }
    if let Some(m) = sig.periods.iter().find(|&&m| m != 2 && m != 3) {
        return Err(Error::InvalidSignature(format!(
            "period {m} has no central Z2 lift here (only 2 and 3)"
        )));
    }
    let z2 = GroupId::Cyclic(2);
    let mut g = GraphOfGroupsDatum::default();
    let z = g.add_vertex("z", z2.clone());
    add_loops(&mut g, sig, z, z2.clone());
    for (j, &m) in sig.periods.iter().enumerate() {
        let x = g.add_vertex(format!("x{}", j + 1), GroupId::Cyclic(2 * m));
        g.add_edge(
            format!("d{}", j + 1),
            z2.clone(),
            (z, InductionSpec::Identity),
            (x, InductionSpec::Cyclic { d: 2, m: 2 * m }),
        );
    }
    Ok(g)
}

pub fn lifted_fuchsian_datum(sig: &Signature) -> Result<GammaCwDatum> {
    lifted_graph(sig)?.to_datum(format!("lifted {sig}"))
}
