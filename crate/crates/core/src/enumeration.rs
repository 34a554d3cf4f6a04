//! Isomorphism classes of small graphs and the per-graph classification
//! pipeline.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, canonical_pair, CanonicalCode};
use crate::conditions::{check_all_conditions, satisfies_star, ConditionReport};
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{lift_twin, recognize, twin_pairs, PatternFamily};
use crate::semigroup::{find_realization, Budget, WitnessCertificate};

/// Largest order the enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 7;

fn check_order(n: usize) -> Result<(), GraphError> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(GraphError::VertexCount(n))
    }
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in canonical-code order.
///
/// Classes on `k` vertices are generated by appending a vertex with every
/// possible neighborhood to each class on `k - 1` vertices; deleting the
/// last vertex of any graph lands in some smaller class, so nothing is
/// missed.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, GraphError> {
    check_order(n)?;
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for h in &level {
            for bits in 0..1u16 << k {
                let (g, _) = h.add_vertex(VertexSet::from_bits(bits))?;
                let (canon, code) = canonical_pair(&g);
                next.entry(code).or_insert(canon);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected classes on `n` vertices, in canonical-code order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Disconnected,
    ConnectedNotStar,
    StarNotZdg,
    Zdg,
}

impl Category {
    pub const ALL: [Category; 4] =
        [Category::Disconnected, Category::ConnectedNotStar, Category::StarNotZdg, Category::Zdg];

    pub fn name(self) -> &'static str {
        match self {
            Category::Disconnected => "Disconnected",
            Category::ConnectedNotStar => "ConnectedNotStar",
            Category::StarNotZdg => "StarNotZDG",
            Category::Zdg => "ZDG",
        }
    }

    pub fn from_name(s: &str) -> Option<Category> {
        Category::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// A necessary condition failed.
    Condition,
    Pattern(PatternFamily),
    /// Lifted from a realization of the graph with one twin removed.
    Duplication(CanonicalCode),
    Search,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Condition => f.write_str("condition"),
            Method::Pattern(family) => write!(f, "pattern:{}", family.name()),
            Method::Duplication(parent) => write!(f, "duplication:{parent}"),
            Method::Search => f.write_str("search"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub use_patterns: bool,
    pub use_duplication: bool,
    /// Accept the two impossibility families without running the solver.
    pub trust_impossibility: bool,
    pub budget: Budget,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            use_patterns: true,
            use_duplication: true,
            trust_impossibility: false,
            budget: Budget::Unlimited,
        }
    }
}

impl ClassifyOptions {
    /// Solver only: every verdict comes from a verified table or an
    /// exhaustive search.
    pub fn search_only() -> Self {
        ClassifyOptions { use_patterns: false, use_duplication: false, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// The graph as classified; certificate tables use its labels.
    pub graph: Graph,
    pub code: CanonicalCode,
    /// `None` when the search ran out of budget.
    pub category: Option<Category>,
    pub method: Method,
    pub report: ConditionReport,
    pub certificate: Option<WitnessCertificate>,
}

impl Classification {
    pub fn is_inconclusive(&self) -> bool {
        self.category.is_none()
    }
}

/// Classifies `g`: disconnected, connected but failing ⋆, or decided by a
/// pattern, a twin reduction, or the solver.
pub fn classify(g: &Graph, options: &ClassifyOptions) -> Classification {
    let report = check_all_conditions(g);
    let code = canonical_form(g);
    let (category, method, certificate) = if !report.connected {
        (Some(Category::Disconnected), Method::Condition, None)
    } else if !report.star_ok {
        (Some(Category::ConnectedNotStar), Method::Condition, None)
    } else {
        let (category, method, certificate) = realize(g, options);
        (category, method, certificate)
    };
    Classification { graph: *g, code, category, method, report, certificate }
}

type Verdict = (Option<Category>, Method, Option<WitnessCertificate>);

/// Decides a connected graph satisfying ⋆.
fn realize(g: &Graph, options: &ClassifyOptions) -> Verdict {
    if options.use_patterns {
        let verdict = recognize(g);
        match verdict.realizable {
            Some(true) => {
                let table = verdict.constructive_table.expect("realizable verdicts carry a table");
                return (Some(Category::Zdg), Method::Pattern(verdict.family), Some(WitnessCertificate::Sat(table)));
            }
            Some(false) if options.trust_impossibility => {
                return (Some(Category::StarNotZdg), Method::Pattern(verdict.family), None);
            }
            _ => {}
        }
    }
    if options.use_duplication {
        if let Some(lifted) = realize_by_duplication(g, options) {
            return lifted;
        }
    }
    match find_realization(g, options.budget).expect("graph is connected") {
        cert @ WitnessCertificate::Sat(_) => (Some(Category::Zdg), Method::Search, Some(cert)),
        cert if cert.is_exhaustive_unsat() => (Some(Category::StarNotZdg), Method::Search, Some(cert)),
        cert => (None, Method::Search, Some(cert)),
    }
}

fn realize_by_duplication(g: &Graph, options: &ClassifyOptions) -> Option<Verdict> {
    let mut tried: Vec<CanonicalCode> = Vec::new();
    for (x, y, _) in twin_pairs(g) {
        let parent = g.remove_vertex(y).ok()?;
        if !parent.is_connected() || !satisfies_star(&parent) {
            continue;
        }
        let code = canonical_form(&parent);
        if tried.contains(&code) {
            continue;
        }
        tried.push(code.clone());
        let (_, _, certificate) = realize(&parent, options);
        if let Some(table) = certificate.as_ref().and_then(|c| c.table()).and_then(|t| lift_twin(g, x, y, t)) {
            return Some((Some(Category::Zdg), Method::Duplication(code), Some(WitnessCertificate::Sat(table))));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;
    use crate::conditions::fixtures::{g319, lettered};

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (1..=5).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn order_out_of_range() {
        assert_eq!(enumerate_all(0), Err(GraphError::VertexCount(0)));
        assert_eq!(enumerate_connected(8), Err(GraphError::VertexCount(8)));
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let graphs = enumerate_all(5).unwrap();
        let codes: Vec<CanonicalCode> = graphs.iter().map(canonical_form).collect();
        for (g, c) in graphs.iter().zip(&codes) {
            assert_eq!(crate::emit_graph6(g), c.as_str());
        }
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn classify_basic() {
        let opts = ClassifyOptions::default();
        let c6 = classify(&Graph::cycle(6).unwrap(), &opts);
        assert_eq!(c6.category, Some(Category::ConnectedNotStar));
        assert_eq!(c6.method, Method::Condition);

        let split = classify(&Graph::empty(2).unwrap(), &opts);
        assert_eq!(split.category, Some(Category::Disconnected));

        let g = classify(&g319(), &opts);
        assert_eq!(g.category, Some(Category::Zdg));
        assert_eq!(g.method.to_string(), "pattern:CompleteBipartitePlusEndsOneVertex");
        let searched = classify(&g319(), &ClassifyOptions::search_only());
        assert_eq!(searched.category, Some(Category::Zdg));
        assert_eq!(searched.method, Method::Search);
    }

    #[test]
    fn classify_g1024() {
        let g = lettered("abcxyzw", &["cxyz", "cxyz", "abxy", "abczw", "abcz", "abxy", "x"]);
        let c = classify(&g, &ClassifyOptions::default());
        assert_eq!(c.category, Some(Category::StarNotZdg));
        assert!(c.certificate.unwrap().is_exhaustive_unsat());
    }

    #[test]
    fn duplication_method() {
        // K_{2,3}: twins everywhere, no end attachments.
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let opts = ClassifyOptions { use_patterns: false, ..ClassifyOptions::default() };
        let c = classify(&g, &opts);
        assert_eq!(c.category, Some(Category::Zdg));
        assert!(c.method.to_string().starts_with("duplication:"), "{}", c.method);
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = lettered("abcxyzw", &["cxyz", "cxyz", "abxy", "abczw", "abcz", "abxy", "x"]);
        let opts = ClassifyOptions { budget: Budget::Nodes(0), ..ClassifyOptions::search_only() };
        let c = classify(&g, &opts);
        if c.is_inconclusive() {
            assert_eq!(c.method, Method::Search);
        } else {
            // Propagation alone refuted it before any branching.
            assert_eq!(c.category, Some(Category::StarNotZdg));
        }
    }
}
