//! Controlled-English question answering over a movie knowledge base.

pub mod bundled;
pub mod cli;
pub mod drs;
pub mod engine;
pub mod frameparser;
pub mod frames;
pub mod learner;
pub mod paraphrase;
pub mod pipeline;
pub mod term;
pub mod ulrq;
