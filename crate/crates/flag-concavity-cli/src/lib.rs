//! Report assembly, rendering and the verification harness behind the
//! `flag-concavity` binary. Lives in a library target so the integration
//! and acceptance suites can drive the same code paths the binary uses.

pub mod render;
pub mod sweep;
pub mod verify;
