//! Text input and ASCII output: parsing of permutations, codes and
//! partitions, and renderers for Rothe diagrams and transition trees.

use std::fmt::Write as _;

use crate::error::Error;
use crate::perm::{Cell, Code, Diagram, Permutation};
use crate::schubert::{EdgeLabel, TransitionNode};

/// A parsed combinatorial input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Perm(Permutation),
    Code(Code),
    Partition(Vec<usize>),
}

/// Dispatch on the `c:`/`p:` prefixes; anything else parses as a
/// permutation in one-line notation.
pub fn parse_input(s: &str) -> Result<Parsed, Error> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("c:") {
        Ok(Parsed::Code(parse_code(rest)?))
    } else if let Some(rest) = s.strip_prefix("p:") {
        Ok(Parsed::Partition(parse_partition(rest)?))
    } else {
        Ok(Parsed::Perm(parse_permutation(s)?))
    }
}

/// One-line notation: either separated values (`5 3 8 4 1 2 6 7`, commas
/// allowed) or the compact digit form (`53841267`) when all values are
/// single digits.
pub fn parse_permutation(s: &str) -> Result<Permutation, Error> {
    let s = s.trim();
    if s.is_empty() || s == "id" {
        return Ok(Permutation::identity());
    }
    let window: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
        parse_number_list(s)?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d >= 1)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad digit '{c}' in compact permutation")))
            })
            .collect::<Result<_, _>>()?
    };
    Permutation::from_window(window)
        .map_err(|_| Error::Parse(format!("'{s}' is not a permutation window")))
}

fn parse_number_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.parse::<usize>()
                .map_err(|_| Error::Parse(format!("'{part}' is not a nonnegative integer")))
        })
        .collect()
}

/// A code: comma or space separated nonnegative entries; trailing zeroes
/// are normalized away.
pub fn parse_code(s: &str) -> Result<Code, Error> {
    Ok(Code::new(parse_number_list(s)?))
}

/// A partition: weakly decreasing positive entries.
pub fn parse_partition(s: &str) -> Result<Vec<usize>, Error> {
    let parts = parse_number_list(s)?;
    if parts.contains(&0) {
        return Err(Error::Parse("partition parts must be positive".into()));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse("partition parts must weakly decrease".into()));
    }
    Ok(parts)
}

/// Content vectors for coefficients: nonnegative entries, kept verbatim.
pub fn parse_content(s: &str) -> Result<Vec<usize>, Error> {
    parse_number_list(s)
}

/// Rendering options for [`render_rothe`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RotheRender {
    /// Mark essential-set boxes with `E`.
    pub essential: bool,
    /// Mark the accessible box with `z`.
    pub accessible: bool,
}

/// The Rothe diagram of a permutation in matrix orientation (row 1 on
/// top): boxes as `□`, the permutation dots as `•`, struck-out positions
/// as `·`.
pub fn render_rothe(w: &Permutation, opts: RotheRender) -> String {
    let d = w.rothe();
    let n = d.grid_size();
    if n == 0 {
        return "(empty grid)\n".into();
    }
    let essential = if opts.essential {
        d.essential_set()
    } else {
        Default::default()
    };
    let accessible = if opts.accessible {
        w.code().accessible_box()
    } else {
        None
    };
    let mut out = String::new();
    for row in 1..=n {
        let mut line = String::new();
        for col in 1..=n {
            let cell = Cell::new(row, col);
            let glyph = if accessible == Some(cell) {
                'z'
            } else if essential.contains(&cell) {
                'E'
            } else if d.contains(cell) {
                '□'
            } else if w.apply(row) == col {
                '•'
            } else {
                '·'
            };
            if col > 1 {
                line.push(' ');
            }
            line.push(glyph);
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// A bare diagram without permutation dots.
pub fn render_diagram(d: &Diagram) -> String {
    let n = d.grid_size();
    if n == 0 {
        return "(empty grid)\n".into();
    }
    let mut out = String::new();
    for row in 1..=n {
        let mut line = String::new();
        for col in 1..=n {
            if col > 1 {
                line.push(' ');
            }
            line.push(if d.contains(Cell::new(row, col)) {
                '□'
            } else {
                '·'
            });
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Indented transition tree with edge labels: `x_r` for deletion moves,
/// the pivot row for march moves; vexillary leaves are tagged.
pub fn render_tree(root: &TransitionNode) -> String {
    let mut out = String::new();
    render_node(root, None, 0, &mut out);
    out
}

fn render_node(node: &TransitionNode, edge: Option<EdgeLabel>, depth: usize, out: &mut String) {
    let indent = "  ".repeat(depth);
    let arrow = match edge {
        None => String::new(),
        Some(EdgeLabel::Deletion(r)) => format!("x{r} -> "),
        Some(EdgeLabel::March(i)) => format!("{i} -> "),
    };
    let tag = if node.is_leaf() { "  (vexillary)" } else { "" };
    let _ = writeln!(
        out,
        "{indent}{arrow}code {}  w = {}{tag}",
        node.code,
        node.code.to_permutation()
    );
    for (label, child) in &node.children {
        render_node(child, Some(*label), depth + 1, out);
    }
}
