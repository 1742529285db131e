//! Holds the acceptance suite (`tests/acceptance.rs`), kept in its own
//! package so that cargo runs it after the unit, property and CLI tests.
