// spkid/synth.h

// Copyright 2026  The spkid Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SPKID_SYNTH_H_
#define SPKID_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "spkid/manifest.h"
#include "spkid/types.h"
#include "spkid/version.h"

namespace spkid {

// Deterministic synthetic bilingual corpus. Each speaker owns a bank of
// noise-excited resonator states (two cascaded second-order all-pole
// sections per state, center frequencies and bandwidths drawn from the
// speaker's seed stream) plus speaker-wide draws shared by every state:
// a vocal tract scale, a resonance width scale, a source tilt and zero,
// and a fixed upper resonance. Language A utterances cycle through
// n_states_lang_a states; language B uses the first n_states_lang_b states
// of the same bank with a small speaker-specific frequency shift. Identical
// specs yield bit-identical corpora.
struct SynthesisSpec {
  int n_speakers = 0;
  int n_states_lang_a = 8;
  int n_states_lang_b = 5;
  double train_duration_s = 60.0;
  int n_test_utterances = 5;
  double test_duration_s = 4.0;
  int sample_rate = 8000;
  uint64_t seed = kDefaultSeed;
};

// Per speaker and language: one train utterance plus n_test_utterances test
// utterances, each with 200 ms of near-silence at both ends and peak
// normalized to 0.9. Throws UsageError on an invalid spec.
std::vector<Utterance> GenerateSyntheticCorpus(const SynthesisSpec &spec);

// Writes one WAV per utterance into out_dir plus manifest.tsv describing
// them; returns the manifest that was written.
Manifest ExportCorpus(const std::vector<Utterance> &corpus,
                      const std::string &out_dir);

}  // namespace spkid

#endif  // SPKID_SYNTH_H_
