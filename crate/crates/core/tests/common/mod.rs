#![allow(dead_code)]

use std::sync::OnceLock;

use jslope_core::corpus::{generate, graph_corpus, Corpus, CorpusEntry, Origin, CORPUS_SEED};
use jslope_core::graphmodel::WeightedPlanarGraph;

/// The full seeded corpus, built once per test binary.
pub fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| generate(CORPUS_SEED).expect("corpus builds"))
}

/// A smaller graph corpus for properties that touch every entry with slow oracles.
pub fn small_graph_corpus() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| graph_corpus(4, 7).expect("corpus builds"))
}

pub fn graph_of(e: &CorpusEntry) -> Option<&WeightedPlanarGraph> {
    match &e.origin {
        Origin::Graph { graph } => Some(graph),
        Origin::Braid { .. } => None,
    }
}
