// Named identities, identity families and word families.
//
// Linear variables are always fresh and pairwise distinct.  Indexed variables
// use bracketed names ([y1], [z2], [t1], ...) so that families never collide.

#ifndef REESFB_FAMILIES_HPP_
#define REESFB_FAMILIES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reesfb/identity.hpp"

namespace reesfb {

  class FamilyError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // xt1xyt2y = xt1yxt2y
  Identity sigma_mu();
  // xyt1xt2y = yxt1xt2y
  Identity sigma_1();
  // xt1yt2xy = xt1yt2yx
  Identity sigma_2();

  // {t1 x t2 x ... tn x = x^n t1 ... tn, x^n = x^(n+1)}
  IdentitySet basis_A(std::size_t n);
  // Canonical almost-linear words in which one variable occurs exactly n
  // times, with at most n + 1 linear variables.
  std::vector<Word> words_A(std::size_t n);

  // Witness identities U_n = V_n of the NFB cases, by case name: N1, N2, N5,
  // N6, N7 and N8.
  Identity nfb_witness(std::string_view case_name, std::size_t n);

  // x0 zxyp x1x0 x2x1 ... xnx(n-1) zxyp xn and the same with zyxp.
  Word     jackson_w(std::size_t n);
  Word     jackson_w_prime(std::size_t n);
  Identity jackson(std::size_t n);

  // Five families of 2-limited words whose finite basis status is not known,
  // part 1..5, each with its reverse.
  std::vector<Word> open_words(std::size_t part, std::size_t n);

  // Bases certifying the finitely based classifier cases.
  IdentitySet basis_F1();
  IdentitySet basis_F2();
  IdentitySet basis_F3();
  IdentitySet basis_F4();
  IdentitySet basis_F5();
  IdentitySet basis_F6();

  struct FamilyOutput {
    std::string       name;
    std::size_t       n = 0;
    IdentitySet       identities;
    std::vector<Word> words;
  };

  // By name: sigma_mu, sigma_1, sigma_2, basis_A (or A<n>), words_A,
  // witness_N1, witness_N2, witness_N5..N8, jackson_w, open_1..5, basis_F1..6.
  FamilyOutput             generate(std::string_view name, std::size_t n = 0);
  std::vector<std::string> family_names();

}  // namespace reesfb

#endif  // REESFB_FAMILIES_HPP_
