//! Newton diagrams of the cofactor `g` in `f − 1 = (x + y − 1)·g`, their sinks
//! and sources, and ASCII renderings of diagrams and chip configurations.

mod render;

pub use render::{parse_chips, render_chips, render_diagram, ChipConfig};

use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::BivarPoly;
use crate::error::{Error, Result};
use crate::model::ReducedModel;
use crate::support::{ExponentPair, Support};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Zero,
    Pos,
    Neg,
}

impl Label {
    fn of(c: &crate::algebra::Rational) -> Label {
        if c.is_zero() {
            Label::Zero
        } else if c.is_positive() {
            Label::Pos
        } else {
            Label::Neg
        }
    }

    fn flip(self) -> Label {
        match self {
            Label::Pos => Label::Neg,
            Label::Neg => Label::Pos,
            Label::Zero => Label::Zero,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Zero => "0",
            Label::Pos => "P",
            Label::Neg => "N",
        })
    }
}

/// Sign labels of `g` on the triangle `a + b ≤ d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonDiagram {
    d: u32,
    g: BivarPoly,
}

impl NewtonDiagram {
    /// Diagram of an arbitrary cofactor on the triangle of size `d`.
    pub fn from_cofactor(g: BivarPoly, d: u32) -> Result<Self> {
        if g.degree().is_some_and(|k| k >= d) {
            return Err(Error::InvalidArgument(format!(
                "cofactor of degree {} does not fit a diagram of size {d}",
                g.degree().unwrap()
            )));
        }
        Ok(NewtonDiagram { d, g })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn cofactor(&self) -> &BivarPoly {
        &self.g
    }

    /// Label at `(a, b)`; everything off the grid reads as [`Label::Zero`].
    pub fn label(&self, a: i64, b: i64) -> Label {
        if a < 0 || b < 0 {
            return Label::Zero;
        }
        Label::of(&self.g.coeff(a as u32, b as u32))
    }

    /// Cells `(a, b)` with `a + b ≤ d`.
    fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..=self.d).flat_map(move |b| (0..=self.d - b).map(move |a| (a, b)))
    }

    /// `(left, self, below)` around `(a, b)`.
    fn neighbourhood(&self, a: u32, b: u32) -> (Label, Label, Label) {
        let (a, b) = (a as i64, b as i64);
        (self.label(a - 1, b), self.label(a, b), self.label(a, b - 1))
    }
}

/// The seven sink patterns: the entry itself is `N` or `0`, its left and lower
/// neighbours are `P` or `0`, and not everything is `0`.
fn is_sink((left, own, below): (Label, Label, Label)) -> bool {
    own != Label::Pos
        && left != Label::Neg
        && below != Label::Neg
        && (own, left, below) != (Label::Zero, Label::Zero, Label::Zero)
}

fn is_source((left, own, below): (Label, Label, Label)) -> bool {
    is_sink((left.flip(), own.flip(), below.flip()))
}

/// The Newton diagram of a model's cofactor `g`.
pub fn diagram_of(m: &ReducedModel) -> Result<NewtonDiagram> {
    let division = m.f_poly().divide_by_line();
    if !division.is_exact() {
        return Err(Error::IdentityFails);
    }
    NewtonDiagram::from_cofactor(division.quotient, m.degree())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinkReport {
    pub sinks: Vec<ExponentPair>,
    pub sources: Vec<ExponentPair>,
    /// `(A, B)` with `g_a0 > 0` exactly for `a < A` and `g_0b > 0` exactly for
    /// `b < B`, when the axes follow that pattern.
    pub axis_cutoffs: Option<(u32, u32)>,
}

fn axis_cutoff(d: u32, along: impl Fn(u32) -> Label) -> Option<u32> {
    let cut = (0..=d).find(|&k| along(k) != Label::Pos)?;
    (cut > 0 && (cut..=d).all(|k| along(k) == Label::Zero)).then_some(cut)
}

pub fn find_sinks(diag: &NewtonDiagram) -> SinkReport {
    let (mut sinks, mut sources) = (Vec::new(), Vec::new());
    for (a, b) in diag.cells() {
        let nb = diag.neighbourhood(a, b);
        if is_sink(nb) {
            sinks.push(ExponentPair::new(a, b));
        }
        if is_source(nb) {
            sources.push(ExponentPair::new(a, b));
        }
    }
    sinks.sort();
    sources.sort();
    let d = diag.d;
    let axis_cutoffs = axis_cutoff(d, |a| diag.label(a as i64, 0))
        .zip(axis_cutoff(d, |b| diag.label(0, b as i64)));
    SinkReport {
        sinks,
        sources,
        axis_cutoffs,
    }
}

/// `2 + ⌈(d − 1)/2⌉`, the least possible number of sinks in degree `d ≥ 1`.
pub fn sink_lower_bound(d: u32) -> usize {
    2 + d.saturating_sub(1).div_ceil(2) as usize
}

/// Outcome of the structural checks on a model's Newton diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub sinks: SinkReport,
    /// Every sink is in the support with a positive coefficient.
    pub sinks_in_support: bool,
    /// The only source is the origin.
    pub unique_source: bool,
    /// Both axes are `P…P0…0` with the cutoffs being sinks.
    pub axis_pattern: bool,
    /// At least `2 + ⌈(d − 1)/2⌉` sinks.
    pub sink_lower_bound: bool,
    /// The support is at least as large as the number of sinks.
    pub support_covers_sinks: bool,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.sinks_in_support
            && self.unique_source
            && self.axis_pattern
            && self.sink_lower_bound
            && self.support_covers_sinks
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.sinks_in_support, "sink outside support"),
            (self.unique_source, "source other than the origin"),
            (self.axis_pattern, "axis sign pattern"),
            (self.sink_lower_bound, "too few sinks"),
            (self.support_covers_sinks, "support smaller than sink count"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

pub fn check_structure(m: &ReducedModel) -> Result<StructureReport> {
    let diag = diagram_of(m)?;
    let sinks = find_sinks(&diag);
    let sinks_in_support = sinks.sinks.iter().all(|&p| m.coefficient(p).is_positive());
    let unique_source = sinks.sources == [ExponentPair::new(0, 0)];
    let axis_pattern = sinks.axis_cutoffs.is_some_and(|(a, b)| {
        sinks.sinks.contains(&ExponentPair::new(a, 0))
            && sinks.sinks.contains(&ExponentPair::new(0, b))
    });
    let sink_lower_bound = sinks.sinks.len() >= sink_lower_bound(m.degree());
    let support_covers_sinks = m.entries().len() >= sinks.sinks.len();
    Ok(StructureReport {
        sinks,
        sinks_in_support,
        unique_source,
        axis_pattern,
        sink_lower_bound,
        support_covers_sinks,
    })
}

/// The necessary conditions on the support of a sharp model of degree `d`:
/// it has `(d,0)` and `(0,d)` and no other pair on the `d`-diagonal, no other
/// axis points, some pair on the `(d−1)`-diagonal (for `d > 1`; in degree one
/// that diagonal is the excluded origin), and no `(j, d−1−j)` with `j` even.
pub fn sharp_support_ok(support: &Support, d: u32) -> bool {
    if d == 0 || support.degree() != Some(d) {
        return false;
    }
    let corners =
        support.contains(ExponentPair::new(d, 0)) && support.contains(ExponentPair::new(0, d));
    corners
        && (d == 1 || support.iter().any(|p| p.degree() + 1 == d))
        && support.iter().all(|p| sharp_point_allowed(p, d))
}

/// Pointwise part of [`sharp_support_ok`]: may `p` appear in a sharp support?
pub(crate) fn sharp_point_allowed(p: ExponentPair, d: u32) -> bool {
    let k = p.degree();
    if k == d {
        return p.nu == 0 || p.mu == 0;
    }
    if p.nu == 0 || p.mu == 0 {
        return false;
    }
    !(k + 1 == d && p.nu.is_multiple_of(2))
}
