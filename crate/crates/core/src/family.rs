//! Named graph families with fixed vertex numberings.
//!
//! Friendship graph `F_n`: centre `w = 0`; page `i ∈ 1..=n` owns vertices
//! `2i-1` and `2i`.
//!
//! Book graph `B_n = K_{1,n} □ P_2`: spine `v_0 = 0`, `w_0 = 1`; page
//! `i ∈ 1..=n` owns `v_i = 2i` and `w_i = 2i+1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Friendship,
    Book,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Friendship,
        Family::Book,
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Friendship => "friendship",
            Family::Book => "book",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
        }
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{s}`")))
    }
}

/// Generates a member of `family`. `params` holds one value, or two for
/// `complete_bipartite`.
pub fn generate_family(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::InvalidFamily(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    let n = params[0];
    let need = |min: usize| -> Result<()> {
        if n < min {
            Err(Error::InvalidFamily(format!("{family} requires n >= {min}, got {n}")))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Friendship => {
            need(2)?;
            friendship(n)
        }
        Family::Book => {
            need(2)?;
            book(n)
        }
        Family::Path => {
            need(1)?;
            Ok(Graph::new(n, (1..n).map(|v| (v - 1, v)))?.with_name(format!("P_{n}")))
        }
        Family::Cycle => {
            need(3)?;
            Ok(Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))?.with_name(format!("C_{n}")))
        }
        Family::Complete => {
            need(1)?;
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Ok(Graph::new(n, edges)?.with_name(format!("K_{n}")))
        }
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(Error::InvalidFamily(format!(
                    "complete_bipartite requires both sides >= 1, got {a},{b}"
                )));
            }
            let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
            Ok(Graph::new(a + b, edges)?.with_name(format!("K_{{{a},{b}}}")))
        }
        Family::Star => {
            need(1)?;
            Ok(Graph::new(n + 1, (1..=n).map(|v| (0, v)))?.with_name(format!("K_{{1,{n}}}")))
        }
    }
}

fn friendship(n: usize) -> Result<Graph> {
    let edges = (1..=n).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    Ok(Graph::new(2 * n + 1, edges)?.with_name(format!("F_{n}")))
}

fn book(n: usize) -> Result<Graph> {
    let pages = (1..=n).flat_map(|i| [(0, 2 * i), (1, 2 * i + 1), (2 * i, 2 * i + 1)]);
    let edges = std::iter::once((0, 1)).chain(pages);
    Ok(Graph::new(2 * n + 2, edges)?.with_name(format!("B_{n}")))
}

/// The paw: a triangle with a pendant vertex.
pub fn paw() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        .expect("paw edges are valid")
        .with_name("paw")
}
