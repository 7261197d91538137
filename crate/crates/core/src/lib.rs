pub mod codebuild;
pub mod dualbuild;
pub mod genexpr;
pub mod gf2e;
pub mod linalg;
pub mod metrics;
pub mod poly;
pub mod reproduce;
pub mod rring;
pub mod suites;
