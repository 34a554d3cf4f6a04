use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::conditions::fixtures::{g319, lettered};
use crate::enumeration::enumerate_connected;

fn grid(labels: &str, rows: &[&str]) -> MulTable {
    let rows: Vec<Vec<Option<Element>>> = rows
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|e| match e {
                    "0" => Some(Element::Zero),
                    l => Some(Element::Vertex(labels.find(l).expect("label"))),
                })
                .collect()
        })
        .collect();
    MulTable::from_rows(&rows).unwrap()
}

fn g319_table() -> MulTable {
    grid(
        "1234567",
        &[
            "1 0 0 4 4 4 4",
            "0 2 2 0 2 2 2",
            "0 2 2 0 2 2 2",
            "4 0 0 0 0 0 0",
            "4 2 2 0 2 2 2",
            "4 2 2 0 2 2 2",
            "4 2 2 0 2 2 2",
        ],
    )
}

fn worked_example() -> (Graph, MulTable) {
    let labels = "abcxyzw";
    let g = lettered(labels, &["xy", "xy", "y", "abyzw", "abcx", "x", "x"]);
    let t = grid(
        labels,
        &[
            "a a a 0 0 a a",
            "a b a 0 0 a a",
            "a a c x 0 a a",
            "0 0 x x 0 0 0",
            "0 0 0 0 y y y",
            "a a a 0 y z z",
            "a a a 0 y z w",
        ],
    );
    (g, t)
}

#[test]
fn known_tables_verify() {
    assert_eq!(verify_witness(&g319(), &g319_table()), Ok(()));
    let (g, t) = worked_example();
    assert_eq!(verify_witness(&g, &t), Ok(()));
    assert!(products_within_candidates(&g, &t));
}

#[test]
fn spectra() {
    let (_, t) = worked_example();
    let a = Element::Vertex(0);
    let expected: Vec<Element> = "aaa00aa".chars().map(|c| if c == '0' { Element::Zero } else { a }).collect();
    assert_eq!(t.row_spectrum(a).unwrap(), Spectrum(expected));
    let four = g319_table().row_spectrum(Element::Vertex(3)).unwrap();
    let mut expected = vec![Element::Zero; 7];
    expected[0] = Element::Vertex(3);
    assert_eq!(four, Spectrum(expected));
}

#[test]
fn verify_rejects() {
    let k2 = Graph::complete(2).unwrap();
    assert_eq!(verify_witness(&k2, &MulTable::null(2).unwrap()), Ok(()));
    let mut t = MulTable::null(2).unwrap();
    t.set(0, 1, Element::Vertex(0));
    assert_eq!(verify_witness(&k2, &t), Err(WitnessError::EdgeMismatch { u: 0, v: 1, adjacent: true }));
    assert!(matches!(
        verify_witness(&k2, &MulTable::null(3).unwrap()),
        Err(WitnessError::Table(TableError::DimensionMismatch { .. }))
    ));
    let mut swapped = MulTable::null(2).unwrap();
    swapped.set(0, 0, Element::Vertex(1));
    swapped.set(1, 1, Element::Vertex(0));
    assert!(matches!(verify_witness(&k2, &swapped), Err(WitnessError::NotAssociative(_))));
    let k1 = Graph::complete(1).unwrap();
    let mut idem = MulTable::new(1).unwrap();
    idem.set(0, 0, Element::Vertex(0));
    assert_eq!(verify_witness(&k1, &idem), Err(WitnessError::NotZeroDivisor(0)));
}

#[test]
fn solver_small_cases() {
    let k2 = Graph::complete(2).unwrap();
    assert!(find_realization(&k2, Budget::Unlimited).unwrap().is_sat());
    let k16 = Graph::star(6).unwrap();
    let cert = find_realization(&k16, Budget::Unlimited).unwrap();
    assert!(verify_witness(&k16, cert.table().unwrap()).is_ok());
    let cert = find_realization(&g319(), Budget::Unlimited).unwrap();
    assert!(verify_witness(&g319(), cert.table().unwrap()).is_ok());
    assert_eq!(find_realization(&Graph::empty(2).unwrap(), Budget::Unlimited), Err(crate::GraphError::Disconnected));
}

#[test]
fn solver_refutes_g600() {
    let g600 = lettered("abcxyzw", &["xyz", "yz", "x", "acyz", "abxzw", "abxy", "y"]);
    let cert = find_realization(&g600, Budget::Unlimited).unwrap();
    assert!(cert.is_exhaustive_unsat(), "{cert:?}");
}

#[test]
fn empty_candidates_refute_without_search() {
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(
        find_realization(&c6, Budget::Nodes(0)).unwrap(),
        WitnessCertificate::Unsat { nodes_explored: 0, exhaustive: true }
    );
}

/// Every total commutative table with the right zero pattern, checked
/// directly for associativity.
fn brute_force(g: &Graph) -> bool {
    let n = g.n();
    let mut free: Vec<(usize, usize)> = Vec::new();
    let mut t = MulTable::new(n).unwrap();
    for x in 0..n {
        for y in x..n {
            if x != y && g.has_edge(x, y) {
                t.set(x, y, Element::Zero);
            } else {
                free.push((x, y));
            }
        }
    }
    fn go(g: &Graph, t: &mut MulTable, free: &[(usize, usize)]) -> bool {
        let Some((&(x, y), rest)) = free.split_first() else {
            return verify_witness(g, t).is_ok();
        };
        let values = (0..=g.n()).map(Element::from_code).filter(|e| x == y || !e.is_zero());
        for e in values {
            t.set(x, y, e);
            if go(g, t, rest) {
                return true;
            }
        }
        false
    }
    go(g, &mut t, &free)
}

#[test]
fn solver_matches_brute_force_up_to_four() {
    for n in 1..=4 {
        for g in enumerate_connected(n).unwrap() {
            let cert = find_realization(&g, Budget::Unlimited).unwrap();
            assert_eq!(cert.is_sat(), brute_force(&g), "{g:?}");
            assert!(cert.is_sat() || cert.is_exhaustive_unsat());
            if let Some(t) = cert.table() {
                assert!(products_within_candidates(&g, t));
            }
        }
    }
}

#[test]
fn candidate_sets_contain_every_solver_product() {
    for g in enumerate_connected(5).unwrap() {
        if let WitnessCertificate::Sat(t) = find_realization(&g, Budget::Unlimited).unwrap() {
            assert!(products_within_candidates(&g, &t), "{g:?}");
        }
    }
}
