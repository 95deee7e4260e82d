use drglab_core::drg::{self, SrgOutcome, SrgParams};
use drglab_core::{aut, connect, families};

fn array(g: &drglab_core::Graph) -> (Vec<u64>, Vec<u64>) {
    let r = drg::intersection_numbers(g).unwrap();
    let a = r.array().unwrap_or_else(|| panic!("{} not distance-regular", g.name()));
    (a.b.clone(), a.c.clone())
}

#[test]
fn johnson_arrays() {
    for n in 4..=9u64 {
        for k in 1..=n / 2 {
            let g = families::johnson(n as usize, k as usize).unwrap();
            let b = (0..k).map(|i| (k - i) * (n - k - i)).collect::<Vec<_>>();
            let c = (1..=k).map(|i| i * i).collect::<Vec<_>>();
            assert_eq!(array(&g), (b, c), "J({n},{k})");
        }
    }
}

#[test]
fn odd_cycles() {
    for n in [5usize, 7, 9, 11] {
        let d = n / 2;
        let mut b = vec![2];
        b.extend(std::iter::repeat_n(1, d - 1));
        let mut c = vec![1; d - 1];
        c.push(1);
        assert_eq!(array(&families::cycle(n).unwrap()), (b, c));
    }
}

#[test]
fn petersen() {
    let g = families::johnson(5, 2).unwrap().complement();
    assert_eq!(array(&g), (vec![3, 2], vec![1, 1]));
    assert_eq!(
        drg::srg_params(&g).unwrap(),
        SrgOutcome::Srg(SrgParams { n: 10, k: 3, lambda: 0, mu: 1 })
    );
    assert_eq!(aut::automorphisms(&g).unwrap().order().to_string(), "120");
    assert_eq!(connect::vertex_connectivity(&g).unwrap(), 3);
    assert_eq!(g.girth(), Some(5));
}

#[test]
fn johnson_pair_groups() {
    let mut fact: u64 = 24;
    for n in 5..=8u64 {
        fact *= n;
        let g = families::johnson(n as usize, 2).unwrap();
        assert_eq!(aut::automorphisms(&g).unwrap().order().to_string(), fact.to_string(), "J({n},2)");
    }
}

#[test]
fn cocktail_party_is_complete_multipartite() {
    for m in 2..=6 {
        let g = families::cocktail_party(m).unwrap();
        assert_eq!(g.regular_valency(), Some(2 * m - 2));
        assert_eq!(connect::vertex_connectivity(&g).unwrap(), 2 * m - 2);
        let want = SrgParams { n: 2 * m as u64, k: 2 * m as u64 - 2, lambda: 2 * m as u64 - 4, mu: 2 * m as u64 - 2 };
        assert_eq!(drg::srg_params(&g).unwrap(), SrgOutcome::Srg(want));
    }
}
