use coxeter_boundary::boundary::Ray;
use coxeter_boundary::{CoxeterMatrix, CoxeterSystem, Order, Word};
use coxeter_boundary_cli::{NamedRay, SystemFile};
use proptest::prelude::*;

const ORDERS: [Order; 6] = [
    Order::Finite(2),
    Order::Finite(3),
    Order::Finite(4),
    Order::Finite(5),
    Order::Finite(12),
    Order::Infinite,
];

fn system() -> impl Strategy<Value = CoxeterSystem> {
    (1usize..=6).prop_flat_map(|n| {
        let labels = proptest::collection::hash_set("[a-z][a-z0-9_]{0,3}", n);
        let entries = proptest::collection::vec(0usize..ORDERS.len(), n * n);
        (labels, entries).prop_map(move |(labels, entries)| {
            let matrix = CoxeterMatrix::symmetric(n, |i, j| ORDERS[entries[i * n + j]]);
            CoxeterSystem::new(matrix, labels.into_iter().collect()).unwrap()
        })
    })
}

fn file() -> impl Strategy<Value = SystemFile> {
    system().prop_flat_map(|sys| {
        let n = sys.rank();
        let raw = proptest::collection::vec(
            (proptest::collection::vec(0..n, 0..3), proptest::collection::vec(0..n, 1..4)),
            0..3,
        );
        (Just(sys), raw).prop_map(|(sys, raw)| {
            let rays = if sys.is_right_angled() {
                raw.into_iter()
                    .filter_map(|(h, p)| Ray::checked(&sys, Word::from(h), Word::from(p)).ok())
                    .enumerate()
                    .map(|(i, ray)| NamedRay { name: format!("r{i}"), ray })
                    .collect()
            } else {
                Vec::new()
            };
            SystemFile { system: sys, rays }
        })
    })
}

proptest! {
    #[test]
    fn printed_files_parse_back(f in file()) {
        let text = f.to_text();
        let parsed: SystemFile = text.parse().unwrap();
        prop_assert_eq!(&parsed, &f);
        prop_assert_eq!(parsed.to_text(), text);
    }
}

#[test]
fn right_angled_flag_survives() {
    let sys = CoxeterSystem::new(
        CoxeterMatrix::symmetric(3, |i, j| if i + j == 1 { Order::Infinite } else { Order::Finite(2) }),
        vec!["x".into(), "y".into(), "z".into()],
    )
    .unwrap();
    let f = SystemFile {
        system: sys,
        rays: vec![NamedRay {
            name: "xy".into(),
            ray: Ray::new(Word::from(vec![2]), Word::from(vec![0, 1])).unwrap(),
        }],
    };
    let back: SystemFile = f.to_text().parse().unwrap();
    assert!(back.system.is_right_angled());
    assert_eq!(back, f);
}
