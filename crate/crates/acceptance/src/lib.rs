//! Acceptance suite lives in tests/acceptance.rs.
