#include "dml/reference_tables.hpp"

#include <array>
#include <stdexcept>

namespace dml {

namespace {

std::vector<Rational> parse_all(const char* const* rows, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Rational::from_string(rows[i]));
  return out;
}

constexpr std::array<const char*, 13> kRebitPt = {
    "-1/858",
    "27/2489344",
    "-8363/66216550400",
    "21859/10443295948800",
    "-23071/539633583390720",
    "3317321/3253917653076541440",
    "-419856257/15366774022001834065920",
    "16945249/21117403549591928832000",
    "-6102620963/240565904621616585139814400",
    "87816716413/103068223454742370906999357440",
    "-7685831825319/255310031843279606667374504181760",
    "23559692226221/21217623285399369347467109090721792",
    "-31283325154283/736092406055063912488279599166259200",
};

constexpr std::array<const char*, 13> kRebitProduct = {
    "0",
    "7/5696343244800",
    "1/677899511057612800",
    "1/45973294808920227840000",
    "1/11662680803407302839532257280",
    "3929/4158654163938276392103553381781471232",
    "1/158158366213274948625327048295175946240",
    "71527/1091771390479438557169317171313498708778365747200",
    "4847/8524774835462825812953111833131999123882778862551040",
    "2637/441859421690475898778224458156196857558486829112995348480",
    "1/16833241044745336849504728327369136893812113975649318731776",
    "66838003/103562821755098721107694750210986399334006111231977898090691403395891200",
    "55601/7991978474394124344137676945763648296251134760058623476703807122125619200",
};

constexpr std::array<const char*, 10> kRebitDegenerate = {
    "-5/2376",
    "7/380160",
    "-9/34777600",
    "443/89942261760",
    "-461/4032782401536",
    "5455/1785064543223808",
    "-631/6948198442598400",
    "474017/161763811601154048000",
    "-4003573/39645007353595350220800",
    "3397/924892257224239349760",
};

}  // namespace

const std::vector<Rational>& reference_table(ReferenceTableId id) {
  static const std::vector<Rational> pt = parse_all(kRebitPt.data(), kRebitPt.size());
  static const std::vector<Rational> prod = parse_all(kRebitProduct.data(), kRebitProduct.size());
  static const std::vector<Rational> degen = parse_all(kRebitDegenerate.data(), kRebitDegenerate.size());
  switch (id) {
    case ReferenceTableId::rebit_pt:
      return pt;
    case ReferenceTableId::rebit_product:
      return prod;
    case ReferenceTableId::rebit_degenerate:
      return degen;
  }
  throw std::logic_error("reference_table: bad id");
}

Rational table_lookup(ReferenceTableId id, long n) {
  const auto& t = reference_table(id);
  if (n < 1 || n > static_cast<long>(t.size()))
    throw std::out_of_range("table_lookup: row out of range");
  return t[static_cast<std::size_t>(n - 1)];
}

long table_rows(ReferenceTableId id) { return static_cast<long>(reference_table(id).size()); }

}  // namespace dml
