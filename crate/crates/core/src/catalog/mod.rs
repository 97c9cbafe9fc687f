//! Built-in groups with their presentations, models and expected values.

mod entries;
mod models;

pub use entries::{conjugate_table_entry, MAX_SYM_DEGREE, MAX_ZN_RANK};
pub use models::{DirectModel, LampMove, ShiftPerm};

use serde::Serialize;

use crate::coset::AbelianInvariants;
use crate::dsl::GroupFile;
use crate::error::Result;
use crate::lpres::LPresentation;
use crate::treeauto::{SelfSimilarSpec, TreeModel};
use crate::words::Word;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "lowercase")]
pub enum Source {
    /// Stated in the literature the entry transcribes.
    Literature(&'static str),
    /// Computed by an independent oracle and frozen.
    Derived(&'static str),
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture<T> {
    pub value: T,
    pub source: Source,
}

/// `element^conjugator = expected`, read as in [`conjugate_table_entry`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationIdentity {
    pub label: String,
    pub element: Word,
    pub conjugator: Word,
    pub expected: Word,
    pub source: Source,
}

/// Words expected to be trivial, checked alongside the relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordFamily {
    pub name: String,
    pub words: Vec<Word>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Fixtures {
    pub abelianization: Option<Fixture<AbelianInvariants>>,
    /// `|G / Stab(n)|` per level.
    pub level_orders: Vec<(usize, Fixture<u64>)>,
    pub order: Option<Fixture<u64>>,
    pub conjugation_table: Vec<ConjugationIdentity>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Defaults {
    pub depth: usize,
    pub level: usize,
    pub abelianization_depth: usize,
    pub wp_samples: usize,
    pub wp_max_len: usize,
    pub max_cosets: usize,
}

impl Default for Defaults {
    fn default() -> Self {
        Defaults { depth: 3, level: 6, abelianization_depth: 5, wp_samples: 500, wp_max_len: 24, max_cosets: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub title: &'static str,
    pub file: GroupFile,
    pub direct_model: Option<DirectModel>,
    pub fixtures: Fixtures,
    pub defaults: Defaults,
    /// Named elements (as words over the presentation alphabet).
    pub named_words: Vec<(String, Word)>,
    pub families: Vec<WordFamily>,
    pub notes: Vec<&'static str>,
}

impl CatalogEntry {
    /// An ad-hoc entry for a user-supplied group file: no fixtures.
    pub fn from_file(file: GroupFile) -> Self {
        CatalogEntry {
            name: file.name.clone(),
            title: "user group file",
            file,
            direct_model: None,
            fixtures: Fixtures::default(),
            defaults: Defaults::default(),
            named_words: vec![],
            families: vec![],
            notes: vec![],
        }
    }

    pub fn lpres(&self) -> &LPresentation {
        &self.file.lpres
    }

    pub fn model(&self) -> Option<&TreeModel> {
        self.file.model.as_ref()
    }

    pub fn spec(&self) -> Option<&SelfSimilarSpec> {
        self.model().map(|m| &m.spec)
    }

    pub fn contraction(&self) -> Option<usize> {
        self.spec().and_then(|s| s.contraction)
    }

    pub fn named(&self, name: &str) -> Option<&Word> {
        self.named_words.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }

    /// File name under `groups/`.
    pub fn file_stem(&self) -> String {
        self.name.chars().filter_map(|c| match c {
            '(' => Some('-'),
            ')' => None,
            c => Some(c),
        }).collect()
    }
}

/// Fixed-name entries; parameterized families are listed with examples.
pub const ENTRY_NAMES: &[&str] = &[
    "grigorchuk",
    "grigorchuk-lysionok",
    "grigorchuk-supergroup",
    "fabrykowski-gupta",
    "gamma-bar",
    "gupta-sidki",
    "lamplighter",
    "bsv",
    "hnn-example",
    "sym-infinity-z",
    "sym-infinity-z-tau",
    "rationals-embedding-H",
];

pub const FAMILIES: &[&str] = &["sym(n)", "sym-transpositions(n)", "zn(n)"];

/// Entries shipped as `groups/*.grp` and covered by `verify --all`.
pub fn default_names() -> Vec<String> {
    ENTRY_NAMES
        .iter()
        .map(|s| s.to_string())
        .chain(["sym(4)", "sym(5)", "sym-transpositions(4)", "sym-transpositions(5)", "zn(3)"].map(String::from))
        .collect()
}

pub fn get_entry(name: &str) -> Result<CatalogEntry> {
    entries::lookup(name)
}

pub fn all_entries() -> Vec<CatalogEntry> {
    default_names().iter().map(|n| get_entry(n).expect("listed entry")).collect()
}
