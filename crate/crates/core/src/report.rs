//! Consolidated invariant reporting: clique number, chromatic number,
//! automorphism order, connectivity, and the complete-subgraph genus bound.

use std::fmt;

use crate::aut::aut_group;
use crate::clique::max_clique;
use crate::color::{chromatic_number_capped, DEFAULT_CHI_CAP};
use crate::error::Result;
use crate::graph::Graph;

/// Genus lower bound from a clique of size `omega`: 0 for omega <= 4, else
/// ceil((omega-3)(omega-4)/12), the genus of the complete graph on omega
/// vertices.
pub fn genus_lower_bound(omega: usize) -> usize {
    assert!(omega >= 1);
    if omega <= 4 {
        0
    } else {
        ((omega - 3) * (omega - 4)).div_ceil(12)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub edge_count: usize,
    pub omega: usize,
    /// Exact chromatic number; omitted when the instance is over the cap.
    pub chi: Option<usize>,
    pub aut_order: usize,
    pub connected: bool,
    pub genus_lb: usize,
}

pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    let omega = max_clique(g).len();
    let chi = if g.n() <= DEFAULT_CHI_CAP {
        Some(chromatic_number_capped(g, DEFAULT_CHI_CAP)?)
    } else {
        None
    };
    Ok(InvariantReport {
        n: g.n(),
        edge_count: g.edge_count(),
        omega,
        chi,
        aut_order: aut_group(g)?.order,
        connected: g.is_connected(),
        genus_lb: if omega == 0 { 0 } else { genus_lower_bound(omega) },
    })
}

impl InvariantReport {
    /// Machine-readable key-value form, one `key=value` per line.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n={}\n", self.n));
        out.push_str(&format!("edges={}\n", self.edge_count));
        out.push_str(&format!("omega={}\n", self.omega));
        match self.chi {
            Some(chi) => out.push_str(&format!("chi={chi}\n")),
            None => out.push_str("chi=skipped\n"),
        }
        out.push_str(&format!("aut_order={}\n", self.aut_order));
        out.push_str(&format!("connected={}\n", self.connected));
        out.push_str(&format!("genus_lb={}\n", self.genus_lb));
        out
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices          {}", self.n)?;
        writeln!(f, "edges             {}", self.edge_count)?;
        writeln!(f, "clique number     {}", self.omega)?;
        match self.chi {
            Some(chi) => writeln!(f, "chromatic number  {chi}")?,
            None => writeln!(f, "chromatic number  (skipped: over cap)")?,
        }
        writeln!(f, "aut order         {}", self.aut_order)?;
        writeln!(f, "connected         {}", self.connected)?;
        write!(f, "genus lower bound {}", self.genus_lb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::iterate_boost;
    use crate::graph::*;

    #[test]
    fn genus_bound_values() {
        assert_eq!(genus_lower_bound(1), 0);
        assert_eq!(genus_lower_bound(4), 0);
        assert_eq!(genus_lower_bound(5), 1);
        assert_eq!(genus_lower_bound(8), 2);
        assert_eq!(genus_lower_bound(20), 23);
    }

    #[test]
    fn genus_bound_monotone() {
        for w in 1..100 {
            assert!(genus_lower_bound(w + 1) >= genus_lower_bound(w));
        }
    }

    #[test]
    fn report_on_k1() {
        let r = invariant_report(&complete_graph(1)).unwrap();
        assert_eq!((r.n, r.omega, r.chi, r.aut_order, r.connected), (1, 1, Some(1), 1, true));
    }

    #[test]
    fn report_on_c5() {
        let r = invariant_report(&cycle_graph(5).unwrap()).unwrap();
        assert_eq!(r.omega, 2);
        assert_eq!(r.chi, Some(3));
        assert_eq!(r.aut_order, 10);
        assert_eq!(r.genus_lb, 0);
    }

    #[test]
    fn report_on_twice_boosted_c5() {
        let g = iterate_boost(&cycle_graph(5).unwrap(), 2).unwrap();
        let r = invariant_report(&g).unwrap();
        assert_eq!(r.n, 20);
        assert_eq!(r.omega, 10);
        assert_eq!(r.genus_lb, 4);
    }
}
