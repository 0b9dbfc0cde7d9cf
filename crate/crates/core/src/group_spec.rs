//! The group mini-language used by front ends.
//!
//! ```text
//! S | A | trivial | aut | autKst:s,t | gens:(0 1 2);(3 4)
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::automorphism_group_with_cap;
use crate::perm::{PermGroup, Permutation};

/// Builds the group described by `text` acting on `n` points. `aut` needs
/// the graph whose automorphisms are meant.
pub fn parse_group_spec(text: &str, n: usize, graph: Option<&Graph>, max_order: u64) -> Result<PermGroup> {
    let text = text.trim();
    let bad = |why: String| Error::BadGroupSpec(format!("{text:?}: {why}"));
    match text {
        "S" => return PermGroup::symmetric_with_cap(n, max_order),
        "A" => return PermGroup::alternating_with_cap(n, max_order),
        "trivial" | "1" => return Ok(PermGroup::trivial(n)),
        "aut" => {
            let x = graph.ok_or_else(|| bad("no graph to take automorphisms of".into()))?;
            if x.n() != n {
                return Err(Error::DegreeMismatch { left: x.n(), right: n });
            }
            return Ok(automorphism_group_with_cap(x, max_order)?.with_tag("aut"));
        }
        _ => {}
    }
    if let Some(rest) = text.strip_prefix("autKst:") {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        let [s, t] = parts[..] else {
            return Err(bad("expected two part sizes".into()));
        };
        let s: usize = s.parse().map_err(|_| bad(format!("bad size {s:?}")))?;
        let t: usize = t.parse().map_err(|_| bad(format!("bad size {t:?}")))?;
        if s + t != n {
            return Err(bad(format!("parts {s} + {t} do not cover {n} points")));
        }
        return PermGroup::aut_complete_bipartite(s, t, max_order);
    }
    if let Some(rest) = text.strip_prefix("gens:") {
        let gens = rest
            .split(';')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(|g| Permutation::from_cycles(n, g).map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        return PermGroup::closure(n, &gens, max_order);
    }
    Err(bad("unknown group".into()))
}
