/** Lightweight Java syntax highlighting: source text to HTML spans. */

const KEYWORDS = new Set(
  (
    'abstract assert boolean break byte case catch char class const continue ' +
    'default do double else enum extends final finally float for goto if ' +
    'implements import instanceof int interface long native new package ' +
    'private protected public return short static strictfp super switch ' +
    'synchronized this throw throws transient try void volatile while ' +
    'true false null'
  ).split(' '),
);

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

const TOKEN = /(\/\/[^\n]*|\/\*[\s\S]*?\*\/|"(?:\\.|[^"\\])*"|'(?:\\.|[^'\\])*'|\b\d[\w.]*\b|\b[A-Za-z_$][\w$]*\b)/g;

export function highlightJava(source: string): string {
  let out = '';
  let last = 0;
  for (const match of source.matchAll(TOKEN)) {
    const token = match[0];
    const start = match.index ?? 0;
    out += escapeHtml(source.slice(last, start));
    let cls: string | null = null;
    if (token.startsWith('//') || token.startsWith('/*')) cls = 'tok-comment';
    else if (token.startsWith('"') || token.startsWith("'")) cls = 'tok-str';
    else if (/^\d/.test(token)) cls = 'tok-num';
    else if (KEYWORDS.has(token)) cls = 'tok-kw';
    else if (/^[A-Z]/.test(token)) cls = 'tok-type';
    out += cls ? `<span class="${cls}">${escapeHtml(token)}</span>` : escapeHtml(token);
    last = start + token.length;
  }
  out += escapeHtml(source.slice(last));
  return out;
}
