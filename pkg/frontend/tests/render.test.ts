import { describe, expect, it } from 'vitest';

import { escapeHtml, highlightJava } from '../src/highlight.js';
import { extractMembers, renderCode, renderOutline, renderTargetPicker } from '../src/render.js';

describe('highlighting', () => {
  it('escapes html and marks token classes', () => {
    const html = highlightJava('if (a < b) { s = "x<y"; } // note');
    expect(html).toContain('<span class="tok-kw">if</span>');
    expect(html).toContain('tok-str');
    expect(html).toContain('tok-comment');
    expect(html).not.toContain('a < b');
    expect(html).toContain('a &lt; b');
  });

  it('escapeHtml covers the metacharacters', () => {
    expect(escapeHtml('<a href="x">&')).toBe('&lt;a href=&quot;x&quot;&gt;&amp;');
  });
});

describe('code view', () => {
  const code = 'int f() {\n    return 1;\n}';

  it('numbers every line', () => {
    const html = renderCode(code);
    expect(html).toContain('data-line="1"');
    expect(html).toContain('data-line="3"');
    expect(html).toContain('<span class="lineno">2</span>');
  });

  it('marks selected ranges and selectability', () => {
    const html = renderCode(code, [[2, 2]], true);
    expect(html).toContain('code-line sel');
    expect(html.match(/data-selectable/g)).toHaveLength(3);
  });
});

describe('member outline', () => {
  const cls = [
    'public class Holder {',
    '    private int first;',
    '    private int second = 2;',
    '',
    '    public int firstValue() {',
    '        return first;',
    '    }',
    '',
    '    public void reset(int value) {',
    '        first = value;',
    '    }',
    '}',
  ].join('\n');

  it('extracts field and method names', () => {
    expect(extractMembers(cls)).toEqual(['first', 'second', 'firstValue', 'reset']);
  });

  it('renders selection state', () => {
    const html = renderOutline(['a', 'b'], new Set(['b']));
    expect(html).toContain('data-member="a"');
    expect(html).toContain('member sel');
  });
});

describe('target picker', () => {
  it('renders candidates and the picked one', () => {
    const html = renderTargetPicker(['p.A', 'p.B'], 'p.B');
    expect(html).toContain('data-target="p.A"');
    expect(html).toContain('target sel');
  });

  it('explains an empty candidate list', () => {
    expect(renderTargetPicker([], null)).toContain('No candidate target classes');
  });
});
