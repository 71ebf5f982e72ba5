//! File formats: the JSON graph document, the sweep CSV, and the SVG
//! network drawing.

pub mod csv;
pub mod json;
pub mod svg;
