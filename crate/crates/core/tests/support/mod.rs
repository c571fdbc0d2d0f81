#![allow(dead_code)]

pub mod checks;
pub mod corpus;
pub mod oracle;
