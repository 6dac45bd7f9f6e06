use irrtools::indices::{albertson_monogenic, sigma_double_star};
use irrtools::{albertson, sigma, Family};

#[test]
fn monogenic_albertson_matches_direct_count() {
    for n in 3..=60usize {
        let g = Family::Monogenic(n).build().unwrap();
        assert_eq!(
            albertson_monogenic(n as u64).unwrap(),
            albertson(&g),
            "n = {n}"
        );
    }
}

#[test]
fn monogenic_degree_multiset() {
    // 1, 2, ..., floor(n/2) - 1, floor(n/2), floor(n/2), ..., n - 1 with the
    // middle value repeated exactly once more for odd n
    for n in 3..=60usize {
        let g = Family::Monogenic(n).build().unwrap();
        let mut expected: Vec<usize> = (1..n).collect();
        expected.push(n / 2);
        expected.sort_unstable();
        assert_eq!(g.degree_multiset(), expected, "n = {n}");
    }
}

#[test]
fn double_star_sigma_matches_direct_count() {
    for r in 2..=30usize {
        for k in 2..=30usize {
            let g = Family::DoubleStar(r, k).build().unwrap();
            assert_eq!(
                sigma_double_star(r as u64, k as u64),
                sigma(&g),
                "r = {r}, k = {k}"
            );
        }
    }
}

#[test]
fn paths_and_cycles() {
    for n in 3..=50usize {
        assert_eq!(sigma(&Family::Path(n).build().unwrap()), 2);
        assert_eq!(sigma(&Family::Cycle(n).build().unwrap()), 0);
    }
}
