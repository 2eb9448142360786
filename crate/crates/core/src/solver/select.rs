//! Choice of the set `X` of outer vertices to color next, and their colors.
//!
//! Rules are tried in the order X1, X2, X3, X4a, X4b, X5, X6; whenever a
//! rule leaves the color open, the smallest admissible one is taken.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lists::{Color, ColorSet};
use crate::plane::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum XRule {
    X1,
    X2,
    X3,
    X4a,
    X4b,
    X5,
    X6,
}

/// The outer face seen from the end `p0` of the precolored path:
/// `F = p2 p1 p0 v1 v2 v3 v4 ...` (with `v4 = p2` on a hexagon).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterContext {
    pub p0: Vertex,
    pub v: [Vertex; 4],
    pub list_p0: ColorSet,
    /// `L(v1)`, ..., `L(v4)`.
    pub lists: [ColorSet; 4],
    /// Whether `v1`, `v2` and `v3` have a common neighbor.
    pub common_neighbor: bool,
    /// Whether `v1` and `v2` are crossing-adjacent.
    pub crossing_adjacent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XSelection {
    pub rule: XRule,
    /// `X` in outer-face order.
    pub x_set: Vec<Vertex>,
    /// The partial coloring; under X4b the middle vertex is absent.
    pub coloring: BTreeMap<Vertex, Color>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelectError {
    #[error("no selection rule applies (list sizes {0:?})")]
    NoRule([usize; 4]),
    #[error("rule {0:?} applies but leaves no admissible color")]
    NoColor(XRule),
}

fn min_outside(l: &ColorSet, avoid: &ColorSet) -> Option<Color> {
    l.iter().copied().find(|c| !avoid.contains(c))
}

pub fn select_x(ctx: &OuterContext) -> Result<XSelection, SelectError> {
    let [v1, v2, v3, _] = ctx.v;
    let [l1, l2, l3, l4] = &ctx.lists;
    let s = [l1.len(), l2.len(), l3.len(), l4.len()];
    let pick = |rule, c: Option<Color>| c.ok_or(SelectError::NoColor(rule));
    let done = |rule, x_set: Vec<Vertex>, coloring: Vec<(Vertex, Color)>| {
        Ok(XSelection { rule, x_set, coloring: coloring.into_iter().collect() })
    };

    if s[0] == 3 && s[2] != 3 {
        let c1 = pick(XRule::X1, min_outside(l1, &ctx.list_p0))?;
        return done(XRule::X1, vec![v1], vec![(v1, c1)]);
    }
    if s[0] == 3 && s[2] == 3 {
        let c2 = pick(XRule::X2, min_outside(l2, l3))?;
        let mut avoid = ctx.list_p0.clone();
        avoid.insert(c2);
        let c1 = pick(XRule::X2, min_outside(l1, &avoid))?;
        return done(XRule::X2, vec![v1, v2], vec![(v1, c1), (v2, c2)]);
    }
    if s[1] == 3 && (s[3] != 3 || s[2] >= 5) {
        let c2 = pick(XRule::X3, l2.iter().next().copied())?;
        return done(XRule::X3, vec![v2], vec![(v2, c2)]);
    }
    if s[1] == 3 && s[2] == 4 && s[3] == 3 {
        if !ctx.common_neighbor || s[0] >= 5 {
            let c3 = pick(XRule::X4a, min_outside(l3, l4))?;
            let c2 = pick(XRule::X4a, min_outside(l2, &[c3].into()))?;
            return done(XRule::X4a, vec![v2, v3], vec![(v2, c2), (v3, c3)]);
        }
        if s[0] == 4 {
            for c3 in l3.iter().copied().filter(|c| !l4.contains(c)) {
                for c1 in l1.iter().copied().filter(|c| !ctx.list_p0.contains(c)) {
                    if !l2.contains(&c1) || !l2.contains(&c3) || c1 == c3 {
                        return done(XRule::X4b, vec![v1, v2, v3], vec![(v1, c1), (v3, c3)]);
                    }
                }
            }
            return Err(SelectError::NoColor(XRule::X4b));
        }
    }
    if ctx.crossing_adjacent && s[0] == 4 && s[1] == 4 {
        if s[2] != 3 {
            let c1 = pick(XRule::X5, min_outside(l1, &ctx.list_p0))?;
            return done(XRule::X5, vec![v1], vec![(v1, c1)]);
        }
        let c2 = pick(XRule::X6, min_outside(l2, l3))?;
        return done(XRule::X6, vec![v2], vec![(v2, c2)]);
    }
    Err(SelectError::NoRule(s))
}
