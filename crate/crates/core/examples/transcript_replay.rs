//! Serialize a transcript to JSON, read it back and replay it, then show
//! that a tampered transcript is rejected.

use albert::diagonalize::{diagonalize, verify_transcript, Tolerances, TranscriptRecord};
use albert::octonion::Algebra;
use albert::random::Sampler;

fn main() -> albert::Result<()> {
    let x = Sampler::new(3).jordan(Algebra::Compact);
    let transcript = diagonalize(&x, &Tolerances::default())?;
    let text = serde_json::to_string_pretty(&transcript).unwrap();
    println!("transcript: {} bytes, {} steps", text.len(), transcript.steps.len());

    let record: TranscriptRecord = serde_json::from_str(&text).unwrap();
    let report = verify_transcript(&record);
    println!("replay ok={} residual {:.2e}", report.ok, report.replay_residual);

    let mut tampered = record.clone();
    tampered.diagonal[0] += 1e-3;
    let report = verify_transcript(&tampered);
    println!("tampered ok={} mismatch {:.2e}", report.ok, report.diagonal_mismatch);
    Ok(())
}
