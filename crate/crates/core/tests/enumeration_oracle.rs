//! Free-tree counts checked against labelled enumeration with an
//! independent isomorphism test.

use std::collections::BTreeSet;

use irrtools::search::{canonical_form, enumerate_free_trees_capped};
use irrtools::sequences::prufer_decode;
use irrtools::Graph;

/// AHU encoding of `g` rooted at `root`.
fn ahu(g: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(root)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| ahu(g, w, Some(root)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Smallest AHU encoding over all roots: an isomorphism invariant that is
/// complete for trees.
fn free_code(g: &Graph) -> String {
    (0..g.vertex_count())
        .map(|r| ahu(g, r, None))
        .min()
        .unwrap()
}

/// Non-decreasing words of length `len` over `0..n`.
fn monotone_words(len: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, len: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let start = prefix.last().copied().unwrap_or(0);
        for s in start..n {
            prefix.push(s);
            go(prefix, len, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), len, n, &mut out);
    out
}

/// Every free tree has a labelling whose Prüfer word is non-decreasing
/// (label vertices in reverse breadth-first order from any root), so these
/// words reach every isomorphism class.
fn oracle_classes(n: usize) -> BTreeSet<String> {
    if n == 1 {
        return BTreeSet::from(["()".to_string()]);
    }
    monotone_words(n - 2, n)
        .into_iter()
        .map(|w| free_code(&prufer_decode(&w, n).unwrap()))
        .collect()
}

#[test]
fn counts_match_oracle() {
    for n in 1..=10 {
        let oracle = oracle_classes(n);
        let generated: Vec<Graph> = enumerate_free_trees_capped(n, 20)
            .unwrap()
            .map(|l| irrtools::search::level_sequence_to_graph(&l).unwrap())
            .collect();
        assert_eq!(generated.len(), oracle.len(), "n = {n}");
        let codes: BTreeSet<String> = generated.iter().map(free_code).collect();
        assert_eq!(
            codes, oracle,
            "n = {n}: generated classes differ from oracle"
        );
    }
}

#[test]
fn oracle_word_count() {
    // C(2n-3, n-2) monotone words for n = 10
    assert_eq!(monotone_words(8, 10).len(), 24310);
}

#[test]
fn canonical_forms_separate_classes() {
    for n in 1..=10 {
        let forms: BTreeSet<_> = enumerate_free_trees_capped(n, 20)
            .unwrap()
            .map(|l| {
                canonical_form(&irrtools::search::level_sequence_to_graph(&l).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(forms.len(), oracle_classes(n).len(), "n = {n}");
    }
}

#[test]
fn canonical_form_agrees_with_oracle_on_random_labellings() {
    for seed in 0..300u64 {
        let n = 2 + (seed % 11) as usize;
        let a = irrtools::sequences::random_tree(n, seed);
        let b = irrtools::sequences::random_tree(n, seed + 10_000);
        let same = free_code(&a) == free_code(&b);
        assert_eq!(
            canonical_form(&a).unwrap() == canonical_form(&b).unwrap(),
            same,
            "seed {seed}"
        );
    }
}

#[test]
fn larger_counts() {
    let known = [235, 551, 1301, 3159, 7741, 19320, 48629, 123867];
    for (n, &want) in (11..=18).zip(&known) {
        assert_eq!(
            enumerate_free_trees_capped(n, 18).unwrap().count(),
            want,
            "n = {n}"
        );
    }
}
