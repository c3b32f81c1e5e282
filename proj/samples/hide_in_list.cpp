// Hides a short message in a shuffled to-do list and reads it back.

#include <iostream>

#include "permstego/permstego.hpp"

int main() {
  using namespace permstego;

  const CoverList chores{"buy milk",      "call the bank",   "clean gutters", "dentist at 3",
                         "email landlord", "fix bike tyre",   "laundry",       "mow lawn",
                         "pay rent",       "renew passport", "return books",  "water plants"};
  const CoverList baseline = canonical_baseline(chores);
  const BaselineOrdering key = generate_key(baseline.size(), 20240501);

  const CoverList sent = encode_message(U"run", default_alphabet(), baseline, key);
  for (const auto& item : sent.items()) std::cout << "- " << item << '\n';

  const DecodedMessage received = decode_message(sent, default_alphabet(), baseline, key);
  std::cout << "decoded: " << utf8::encode(received.text) << '\n';
  return received.text == U"run" ? 0 : 1;
}
