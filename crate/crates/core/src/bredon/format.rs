//! Text format for Γ-CW data.
//!
//! ```text
//! # comments start with '#'
//! name = modular
//! flags = snf-equivalent        (optional)
//!
//! [cells.0]
//! a = Z2
//! b = Z3
//! [cells.1]
//! e = 1
//! [boundary.1]
//! e = +1 * b : triv->Z3, -1 * a : triv->Z2
//! ```
//!
//! A boundary line lists signed terms `±1 * target : spec` with spec one of
//! `id`, `triv->G` or `Zd->Zm`; `0` (or omitting the line) means zero.
//! Instead of boundary sections a file may give `[matrix.N]` sections: the
//! rows of `C_N -> C_{N-1}`, indexed by the basis of `C_{N-1}` in cell
//! order, with whitespace-separated integers. An empty matrix section is the
//! zero map.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactlinalg::IntMatrix;
use crate::groups::GroupId;

use super::{BoundaryTerm, Cell, GammaCwDatum, InductionSpec};

const SNF_FLAG: &str = "snf-equivalent";

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Cells(usize),
    Boundary(usize),
    Matrix(usize),
}

fn section(line: usize, header: &str) -> Result<Section> {
    let (kind, dim) = header
        .split_once('.')
        .ok_or_else(|| Error::parse(line, format!("bad section header `[{header}]`")))?;
    let dim: usize = dim
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("bad dimension in `[{header}]`")))?;
    match (kind.trim(), dim) {
        ("cells", _) => Ok(Section::Cells(dim)),
        ("boundary", 0) | ("matrix", 0) => {
            Err(Error::parse(line, "0-cells have no boundary"))
        }
        ("boundary", _) => Ok(Section::Boundary(dim)),
        ("matrix", _) => Ok(Section::Matrix(dim)),
        _ => Err(Error::parse(line, format!("unknown section `[{header}]`"))),
    }
}

fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || ",:*=#[]".contains(c))
}

fn parse_term(line: usize, text: &str) -> Result<BoundaryTerm> {
    let err = |m: String| Error::parse(line, m);
    let (lhs, spec) = text
        .split_once(':')
        .ok_or_else(|| err(format!("term `{}` lacks `: spec`", text.trim())))?;
    let (coef, target) = lhs
        .split_once('*')
        .ok_or_else(|| err(format!("term `{}` lacks `coefficient *`", text.trim())))?;
    let coefficient = match coef.trim() {
        "+1" | "1" | "+" => 1,
        "-1" | "-" => -1,
        other => return Err(err(format!("coefficient `{other}` is not +1 or -1"))),
    };
    let target = target.trim();
    if !valid_label(target) {
        return Err(err(format!("bad cell label `{target}`")));
    }
    let spec: InductionSpec = spec.parse().map_err(|e| relocate(e, line))?;
    Ok(BoundaryTerm::new(coefficient, target, spec))
}

/// Attaches a line number to errors raised by the nested parsers.
fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::parse(line, message),
        Error::UnknownGroupName(_) | Error::NotInCatalogue(_) => Error::parse(line, e.to_string()),
        other => other,
    }
}

pub fn parse_datum(text: &str) -> Result<GammaCwDatum> {
    let mut name = None;
    let mut snf_equivalent = false;
    let mut cells: BTreeMap<usize, Vec<(usize, Cell)>> = BTreeMap::new();
    let mut terms: BTreeMap<usize, Vec<(usize, String, Vec<BoundaryTerm>)>> = BTreeMap::new();
    let mut matrices: BTreeMap<usize, (usize, Vec<Vec<BigInt>>)> = BTreeMap::new();
    let mut current = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(header) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            current = section(line, header)?;
            match current {
                Section::Cells(n) => {
                    cells.entry(n).or_default();
                }
                Section::Matrix(n)
                    if matrices.insert(n, (line, Vec::new())).is_some() => {
                        return Err(Error::parse(line, format!("duplicate [matrix.{n}]")));
                    }
                _ => {}
            }
            continue;
        }
        if let Section::Matrix(n) = current {
            let row = content
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| Error::parse(line, format!("`{t}` is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            matrices.get_mut(&n).expect("section registered").1.push(row);
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("expected `key = value`, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match current {
            Section::Header => match key {
                "name" => name = Some(value.to_string()),
                "flags" => {
                    for flag in value.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                        if flag != SNF_FLAG {
                            return Err(Error::parse(line, format!("unknown flag `{flag}`")));
                        }
                        snf_equivalent = true;
                    }
                }
                _ => return Err(Error::parse(line, format!("unknown header key `{key}`"))),
            },
            Section::Cells(n) => {
                if !valid_label(key) {
                    return Err(Error::parse(line, format!("bad cell label `{key}`")));
                }
                let group: GroupId = value.parse().map_err(|e| relocate(e, line))?;
                cells.entry(n).or_default().push((line, Cell::new(key, group)));
            }
            Section::Boundary(n) => {
                let list = if value == "0" {
                    Vec::new()
                } else {
                    value
                        .split(',')
                        .map(|t| parse_term(line, t))
                        .collect::<Result<Vec<_>>>()?
                };
                terms.entry(n).or_default().push((line, key.to_string(), list));
            }
            Section::Matrix(_) => unreachable!(),
        }
    }

    if !terms.is_empty() && !matrices.is_empty() {
        return Err(Error::parse(1, "file mixes [boundary.N] and [matrix.N] sections"));
    }
    let top = cells.keys().next_back().map_or(0, |&n| n + 1);
    let mut by_dim: Vec<Vec<Cell>> = vec![Vec::new(); top];
    for (n, list) in cells {
        for (line, cell) in list {
            if by_dim[n].iter().any(|c| c.label == cell.label) {
                return Err(Error::parse(line, format!("duplicate cell `{}` in dimension {n}", cell.label)));
            }
            by_dim[n].push(cell);
        }
    }
    for (n, list) in terms {
        for (line, label, list) in list {
            let cell = by_dim
                .get_mut(n)
                .and_then(|v| v.iter_mut().find(|c| c.label == label))
                .ok_or_else(|| Error::parse(line, format!("no {n}-cell named `{label}`")))?;
            if !cell.boundary.is_empty() {
                return Err(Error::parse(line, format!("second boundary line for `{label}`")));
            }
            cell.boundary = list;
        }
    }

    let mut datum = GammaCwDatum::new(name.unwrap_or_else(|| "unnamed".into()), by_dim);
    datum.snf_equivalent = snf_equivalent;
    if !matrices.is_empty() {
        let ranks = datum.chain_ranks();
        let mut raw: Vec<IntMatrix> = (1..ranks.len())
            .map(|n| IntMatrix::zeros(ranks[n - 1], ranks[n]))
            .collect();
        for (n, (line, rows)) in matrices {
            if n >= ranks.len() {
                return Err(Error::parse(line, format!("[matrix.{n}] but no {n}-cells")));
            }
            if rows.is_empty() {
                continue;
            }
            let (r, c) = (ranks[n - 1], ranks[n]);
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::parse(
                    line,
                    format!("[matrix.{n}] must have {r} rows of {c} integers"),
                ));
            }
            raw[n - 1] = IntMatrix::new(r, c, rows.into_iter().flatten().collect())?;
        }
        datum.raw_boundaries = Some(raw);
    }
    Ok(datum)
}

pub fn render_datum(d: &GammaCwDatum) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name = {}", d.name);
    if d.snf_equivalent {
        let _ = writeln!(out, "flags = {SNF_FLAG}");
    }
    for (n, cells) in d.cells.iter().enumerate() {
        let _ = writeln!(out, "\n[cells.{n}]");
        for c in cells {
            let _ = writeln!(out, "{} = {}", c.label, c.stabiliser);
        }
    }
    match &d.raw_boundaries {
        Some(raw) => {
            for (k, m) in raw.iter().enumerate() {
                let _ = writeln!(out, "\n[matrix.{}]", k + 1);
                if m.is_zero() {
                    continue;
                }
                for i in 0..m.rows() {
                    let row: Vec<String> = m.row(i).iter().map(BigInt::to_string).collect();
                    let _ = writeln!(out, "{}", row.join(" "));
                }
            }
        }
        None => {
            for (n, cells) in d.cells.iter().enumerate().skip(1) {
                if cells.iter().all(|c| c.boundary.is_empty()) {
                    continue;
                }
                let _ = writeln!(out, "\n[boundary.{n}]");
                for c in cells.iter().filter(|c| !c.boundary.is_empty()) {
                    let terms: Vec<String> = c
                        .boundary
                        .iter()
                        .map(|t| format!("{:+} * {} : {}", t.coefficient, t.target, t.spec))
                        .collect();
                    let _ = writeln!(out, "{} = {}", c.label, terms.join(", "));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bredon::{bredon_homology, fuchsian_cocompact_datum, lifted_fuchsian_datum, sl3_datum};
    use crate::exactlinalg::FinAbGroup;

    const MODULAR: &str = "\
# PSL2(Z) as Z2 * Z3
name = modular

[cells.0]
a = Z2
b = Zm(3)

[cells.1]
e = 1

[boundary.1]
e = +1 * b : triv->Z3, -1 * a : triv->Z2
";

    #[test]
    fn parse_modular_group() {
        let d = parse_datum(MODULAR).unwrap();
        assert_eq!(d.name, "modular");
        assert_eq!(d.cells[0][1].stabiliser, GroupId::Cyclic(3));
        let h = bredon_homology(&d).unwrap();
        assert_eq!(h, vec![FinAbGroup::free(4), FinAbGroup::zero()]);
    }

    #[test]
    fn round_trips() {
        let sig = "[1,0;2,5]".parse().unwrap();
        let lifted = "[0,2;2,3]".parse().unwrap();
        for d in [
            parse_datum(MODULAR).unwrap(),
            fuchsian_cocompact_datum(&sig).unwrap(),
            lifted_fuchsian_datum(&lifted).unwrap(),
            sl3_datum(),
        ] {
            let text = render_datum(&d);
            assert_eq!(parse_datum(&text).unwrap(), d, "{text}");
        }
    }

    #[test]
    fn raw_mode() {
        let text = "[cells.0]\nv = 1\nw = 1\n[cells.1]\ne = 1\n[matrix.1]\n1\n-1\n";
        let h = bredon_homology(&parse_datum(text).unwrap()).unwrap();
        assert_eq!(h, vec![FinAbGroup::free(1), FinAbGroup::zero()]);
        let empty = "[cells.0]\nv = 1\n[cells.1]\ne = 1\n[matrix.1]\n";
        let h = bredon_homology(&parse_datum(empty).unwrap()).unwrap();
        assert_eq!(h, vec![FinAbGroup::free(1), FinAbGroup::free(1)]);
    }

    fn line_of(text: &str) -> usize {
        match parse_datum(text).unwrap_err() {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("[cells.0]\nv = A5\n"), 2);
        assert_eq!(line_of("[cells.0]\nv = 1\n[cells.1]\ne = 1\n[boundary.1]\ne = 2 * v : id\n"), 6);
        assert_eq!(line_of("[cells.0]\nv = 1\n[boundary.1]\nf = 0\n"), 4);
        assert_eq!(line_of("[cells.0]\nv = 1\n[cells.1]\ne = 1\n[matrix.1]\n1 2\n"), 5);
        assert_eq!(line_of("[cells.x]\n"), 1);
        assert_eq!(line_of("name = a\nbogus\n"), 2);
        assert_eq!(line_of("[cells.0]\nv = 1\nv = 1\n"), 3);
        assert_eq!(line_of("[cells.0]\nv = 1\n[cells.1]\ne = 1\n[boundary.1]\ne = +1 * v : Z2->S4\n"), 6);
    }

    #[test]
    fn mixing_modes_is_rejected() {
        let text = "[cells.0]\nv = 1\n[cells.1]\ne = 1\n[boundary.1]\ne = 0\n[matrix.1]\n";
        assert!(parse_datum(text).unwrap_err().is_parse_error());
    }
}
