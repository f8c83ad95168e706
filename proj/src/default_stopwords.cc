// Copyright 2026 The kwbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kwbench/default_stopwords.h"

namespace kwbench {
namespace internal {

const std::vector<std::string>& PolishStopwords() {
  static const std::vector<std::string> kWords = {
      "a", "aby", "ach", "acz", "aczkolwiek", "aj", "albo", "ale", "alez",
      "ani", "az", "bardziej", "bardzo", "beda", "bedzie", "bez", "bo",
      "bowiem", "by", "byc", "byl", "byla", "byli", "bylo", "byly", "bym",
      "bynajmniej", "bys", "cala", "cali", "caly", "ci", "cie", "ciebie", "co",
      "cokolwiek", "cos", "czasami", "czasem", "czemu", "czy", "czyli",
      "daleko", "dla", "dlaczego", "dlatego", "do", "dobrze", "dokad", "dosc",
      "duzo", "dwa", "dwaj", "dwie", "dwoje", "dzis", "dzisiaj", "gdy", "gdyby",
      "gdyz", "gdzie", "gdziekolwiek", "gdzies", "go", "i", "ich", "ile", "im",
      "inna", "inne", "inny", "innych", "iz", "ja", "jak", "jaka", "jakas",
      "jakby", "jaki", "jakich", "jakichs", "jakie", "jakiej", "jakim", "jakis",
      "jakiz", "jakkolwiek", "jako", "jakos", "je", "jeden", "jedna", "jednak",
      "jednakze", "jedno", "jednym", "jego", "jej", "jemu", "jesli", "jest",
      "jestem", "jestes", "jestesmy", "jeszcze", "jezeli", "juz", "kazda",
      "kazde", "kazdy", "kiedy", "kilka", "kims", "kto", "ktokolwiek", "ktora",
      "ktore", "ktorego", "ktorej", "ktory", "ktorych", "ktorym", "ktorymi",
      "ktorzy", "ku", "lecz", "lub", "ma", "maja", "mam", "mamy", "mi",
      "miedzy", "mimo", "mna", "mnie", "moga", "moi", "moim", "moj", "moja",
      "moje", "moze", "mozna", "mu", "musi", "my", "na", "nad", "nam", "nami",
      "nas", "nasi", "nasz", "nasza", "nasze", "naszego", "naszych",
      "natomiast", "nawet", "nia", "nic", "nich", "nie", "niech", "niego",
      "niej", "niemu", "nigdy", "nim", "nimi", "niz", "no", "o", "obok", "od",
      "okolo", "on", "ona", "one", "oni", "ono", "oraz", "oto", "owszem", "pan",
      "pana", "pani", "po", "pod", "podczas", "pomimo", "ponad", "poniewaz",
      "powinien", "powinna", "powinni", "powinno", "poza", "prawie", "przeciez",
      "przed", "przede", "przedtem", "przez", "przy", "raz", "razie", "sa",
      "sam", "sama", "sie", "skad", "soba", "sobie", "swoich", "swoim", "swoj",
      "swoje", "swojej", "ta", "tak", "taka", "taki", "takich", "takie",
      "takiej", "takim", "takze", "tam", "te", "tego", "tej", "ten", "teraz",
      "tez", "to", "toba", "tobie", "totez", "trzeba", "tu", "tutaj", "twoi",
      "twoim", "twoj", "twoja", "twoje", "twym", "ty", "tych", "tylko", "tym",
      "tymi", "u", "w", "wam", "wami", "was", "wasz", "wasza", "wasze", "we",
      "wedlug", "wiec", "wiecej", "wiele", "wielu", "wlasnie", "wszyscy",
      "wszystkich", "wszystkie", "wszystkim", "wszystko", "wtedy", "wy", "z",
      "za", "zaden", "zadna", "zadne", "zadnych", "zapewne", "zawsze", "ze",
      "zeby", "znow", "zostac", "zostal", "zostala", "zostalo", "zostaly",
  };
  return kWords;
}

const std::vector<std::string>& EnglishStopwords() {
  static const std::vector<std::string> kWords = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am",
      "among", "amongst", "an", "and", "any", "are", "as", "at", "be",
      "because", "been", "before", "being", "below", "between", "both", "but",
      "by", "can", "could", "did", "do", "does", "doing", "down", "during",
      "each", "few", "for", "from", "further", "had", "has", "have", "having",
      "he", "her", "here", "hers", "herself", "him", "himself", "his", "how",
      "however", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
      "may", "me", "might", "more", "most", "must", "my", "myself", "no", "nor",
      "not", "now", "of", "off", "on", "once", "only", "or", "other", "our",
      "ours", "ourselves", "out", "over", "own", "per", "same", "shall", "she",
      "should", "so", "some", "such", "than", "that", "the", "their", "theirs",
      "them", "themselves", "then", "there", "therefore", "these", "they",
      "this", "those", "through", "thus", "to", "too", "under", "until", "up",
      "upon", "very", "via", "was", "we", "were", "what", "when", "where",
      "which", "while", "who", "whom", "why", "will", "with", "within",
      "without", "would", "you", "your", "yours", "yourself", "yourselves",
  };
  return kWords;
}

}  // namespace internal
}  // namespace kwbench
