#pragma once

#include "gtlab/fox_framework.hpp"
#include "gtlab/qseries.hpp"

namespace gtlab {

// z_i (.) z_j = delta_ij z_i, extended by contracting the last letter of the
// left word with the first letter of the right word; zero on the unit word.
TSeries odot(const TSeries& a, const TSeries& b);
PairingFn odot_pairing();

// s(-z) in T((H)), z = z_1 + ... + z_p.
TSeries s_of_minus_z(int p, int trunc_deg);

// The formal homotopy intersection pairing (.) + rho_{s(-z)}, for inputs of
// degree at most trunc_deg.
PairingFn eta_pairing(int p, int trunc_deg);
TSeries eta_formal(const TSeries& a, const TSeries& b);

// Internal contractions on C^0, -2 on C^1, zero on higher C-powers.
TSeries xi(const FSeries& x);
QDerFn xi_qder();

// The two inner parameters (-1/4 + phi(z), -1/4 - phi(-z)).
std::pair<TSeries, TSeries> mu_inner_params(const AssocCoeffs& coeffs, int p, int trunc_deg);

// xi + q_inner(-1/4 + phi(z), -1/4 - phi(-z)), ruled by eta_pairing.
// Throws InconsistentCoeffs if the inner parameters do not sum to s(-z).
QDerFn mu_formal(const AssocCoeffs& coeffs, int p, int trunc_deg);

// The necklace Lie bracket on cyclic words.
CycSeries necklace_bracket(const CycSeries& a, const CycSeries& b);

// The Schedler cobracket, applied word by word (to canonical representatives
// for cyclic input).
CycSeries2 schedler(const TSeries& a);
CycSeries2 schedler(const CycSeries& a);
RedCycSeries2 schedler_reduced(const CycSeries& a);

// Genus-g alphabet: a_i = 2i - 1, b_i = 2i.
inline int letter_a(int i) { return 2 * i - 1; }
inline int letter_b(int i) { return 2 * i; }

// omega(a_i, b_j) = delta_ij = -omega(b_j, a_i), zero otherwise.
int omega(int x, int y);

// h_1..h_m ~> k_1..k_n = omega(h_m, k_1) h_1..h_{m-1} k_2..k_n.
TSeries omega_pair(const TSeries& a, const TSeries& b);
PairingFn omega_pairing();

// omega = sum_i [a_i, b_i] over 2g letters.
TSeries omega_element(int genus, int trunc_deg);

// omega_pair + rho_{s(omega)}.
PairingFn eta_symplectic(int genus, int trunc_deg);

struct EmbedResult {
  TSeries value;
  bool truncation_loss = false;  // 2 * input degree exceeds the target degree
};

// The algebra map z_i -> b_i a_i - a_i b_i into the genus-p alphabet.
EmbedResult embed_I(const TSeries& a, int target_deg);

}  // namespace gtlab
