//! Plain-text vertex files.
//!
//! ```text
//! # comment lines start with '#'
//! d n
//! x_1 ... x_d     (n rows)
//! ```

use std::fmt::Write;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::Int;
use crate::polytope::{LatticePoint, Polytope};

/// Parses a vertex file into `(d, points)`. Blank lines are ignored.
pub fn parse_vertex_file(text: &str) -> Result<(usize, Vec<LatticePoint>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `d n` header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [d, n] = fields[..] else {
        return Err(Error::Parse {
            line,
            msg: format!("header must be `d n`, found `{header}`"),
        });
    };
    let parse_count = |s: &str, what: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            msg: format!("invalid {what} `{s}`"),
        })
    };
    let d = parse_count(d, "dimension")?;
    let n = parse_count(n, "point count")?;
    if d == 0 {
        return Err(Error::Parse {
            line,
            msg: "dimension must be positive".into(),
        });
    }

    let mut points = Vec::with_capacity(n);
    for (line, row) in lines {
        if points.len() == n {
            return Err(Error::Parse {
                line,
                msg: format!("more than the {n} declared points"),
            });
        }
        let coords = row
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Int>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid integer `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != d {
            return Err(Error::Parse {
                line,
                msg: format!("expected {d} coordinates, found {}", coords.len()),
            });
        }
        points.push(LatticePoint::new(coords));
    }
    if points.len() != n {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("declared {n} points, found {}", points.len()),
        });
    }
    Ok((d, points))
}

/// Writes the vertices of `p` in vertex-file format.
pub fn write_vertex_file(p: &Polytope) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", p.dim(), p.vertices().len()).unwrap();
    for v in p.vertices() {
        writeln!(out, "{}", v.iter().join(" ")).unwrap();
    }
    out
}
