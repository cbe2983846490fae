//! The bundled venture-screening case study: four tutoring ventures rated on
//! management team, financial situation, market condition and service or
//! product, in probabilistic hesitant and plain hesitant form.

use super::{parse_document, ProblemDocument};

pub const CASE_STUDY_PHF_JSON: &str = include_str!("../../fixtures/case_study_phf.todim.json");
pub const CASE_STUDY_HF_JSON: &str = include_str!("../../fixtures/case_study_hf.todim.json");

pub fn case_study_phf() -> ProblemDocument {
    parse_document(CASE_STUDY_PHF_JSON).expect("bundled fixture parses")
}

pub fn case_study_hf() -> ProblemDocument {
    parse_document(CASE_STUDY_HF_JSON).expect("bundled fixture parses")
}
