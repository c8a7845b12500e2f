/**
 * Pure HTML builders for the review screens. Everything here is a function
 * of the session state, so the views are testable without a browser;
 * main.ts owns the real DOM and event wiring.
 */

import { Checklist, Sample } from './api.js';
import { escapeHtml, highlightJava } from './highlight.js';
import { LineRange, ReviewSession } from './session.js';

export function renderCode(
  code: string,
  selected: LineRange[] = [],
  selectable = false,
): string {
  const inRange = (line: number) => selected.some(([a, b]) => line >= a && line <= b);
  const rows = highlightJava(code)
    .split('\n')
    .map((html, i) => {
      const line = i + 1;
      const cls = inRange(line) ? 'code-line sel' : 'code-line';
      const grab = selectable ? ' data-selectable="1"' : '';
      return (
        `<div class="${cls}" data-line="${line}"${grab}>` +
        `<span class="lineno">${line}</span>` +
        `<span class="src">${html || '&nbsp;'}</span></div>`
      );
    });
  return `<div class="code-view">${rows.join('')}</div>`;
}

/** Field and method names declared at the top level of a class body; a UI
 * affordance only — the server re-validates membership on submit. */
export function extractMembers(classCode: string): string[] {
  const members: string[] = [];
  const method = /^\s+(?:(?:public|private|protected|static|final|abstract|synchronized|native)\s+)*[\w<>,.\[\]\s]*?(\w+)\s*\(/;
  const field = /^\s+(?:(?:public|private|protected|static|final|transient|volatile)\s+)+[\w<>,.\[\]]+\s+(\w+)\s*(?:=|;|,)/;
  for (const line of classCode.split('\n')) {
    const m = method.exec(line);
    if (m && m[1] && !/^(if|for|while|switch|catch|return|new)$/.test(m[1])) {
      members.push(m[1]);
      continue;
    }
    const f = field.exec(line);
    if (f && f[1]) members.push(f[1]);
  }
  return [...new Set(members)];
}

export function renderChecklist(
  checklist: Checklist,
  answers: Map<string, boolean>,
  focusId: string | null,
): string {
  const items = checklist.questions
    .filter((q) => q.kind === 'YES_NO')
    .map((q) => {
      const value = answers.get(q.id);
      const mark = value === undefined ? '·' : value ? 'yes' : 'no';
      const cls = q.id === focusId ? 'question focus' : 'question';
      return (
        `<li class="${cls}" data-question="${q.id}">` +
        `<span class="qtext">${escapeHtml(q.text)}</span>` +
        `<span class="answer" data-answer="${q.id}">${mark}</span>` +
        `<button data-yes="${q.id}">y</button><button data-no="${q.id}">n</button></li>`
      );
    });
  return `<ol class="checklist">${items.join('')}</ol>`;
}

export function renderOutline(members: string[], picked: Set<string>): string {
  const items = members.map((m) => {
    const cls = picked.has(m) ? 'member sel' : 'member';
    return `<li class="${cls}" data-member="${escapeHtml(m)}">${escapeHtml(m)}</li>`;
  });
  return `<ul class="outline">${items.join('')}</ul>`;
}

export function renderTargetPicker(targets: string[], picked: string | null): string {
  if (targets.length === 0) {
    return '<p class="hint">No candidate target classes are known for this sample.</p>';
  }
  const items = targets.map((t) => {
    const cls = t === picked ? 'target sel' : 'target';
    return `<li class="${cls}" data-target="${escapeHtml(t)}">${escapeHtml(t)}</li>`;
  });
  return `<ul class="targets">${items.join('')}</ul>`;
}

function renderSamplePanes(session: ReviewSession): string {
  const sample = session.sample as Sample;
  if (sample.smell === 'FEATURE_ENVY') {
    const source = sample.context['source_class'];
    const target = sample.context['target_class'];
    const left = `<div class="pane"><h3>method under review</h3>${renderCode(sample.code)}</div>`;
    if (source || target) {
      const right =
        `<div class="pane"><h3>source class</h3>${renderCode(source ?? '')}</div>` +
        `<div class="pane"><h3>target class</h3>${renderCode(target ?? '')}</div>`;
      return `<div class="panes">${left}${right}</div>`;
    }
    return `<div class="panes">${left}</div>`;
  }
  if (sample.smell === 'LARGE_CLASS') {
    const outline = renderOutline(extractMembers(sample.code), session.members);
    return (
      `<div class="panes">` +
      `<div class="pane"><h3>class under review</h3>${renderCode(sample.code)}</div>` +
      `<div class="pane side"><h3>member outline</h3>${outline}</div></div>`
    );
  }
  return (
    `<div class="panes"><div class="pane">` +
    `<h3>method under review</h3>` +
    renderCode(sample.code, session.lineRanges, true) +
    `</div></div>`
  );
}

function renderActionArea(session: ReviewSession): string {
  const sample = session.sample as Sample;
  if (sample.smell === 'LONG_METHOD') {
    const ranges = session.lineRanges.map(([a, b]) => `${a}–${b}`).join(', ') || 'none';
    return (
      `<p class="hint">Drag over line numbers to mark the lines to extract ` +
      `(selected: <span class="picked-ranges">${ranges}</span>)` +
      ` <button data-clear-ranges="1">clear</button></p>`
    );
  }
  if (sample.smell === 'LARGE_CLASS') {
    return `<p class="hint">Pick the members to extract from the outline (selected: ${
      [...session.members].sort().join(', ') || 'none'
    })</p>`;
  }
  return (
    `<p class="hint">Pick the class this method should move to:</p>` +
    renderTargetPicker(session.candidateTargets(), session.moveTarget)
  );
}

export function renderApp(session: ReviewSession): string {
  const head =
    `<header><strong>smell review</strong>` +
    `<span class="who">reviewer: ${escapeHtml(session.reviewerId)}</span></header>`;

  if (session.state === 'idle' || session.state === 'loading') {
    return `${head}<p class="status">loading…</p>`;
  }
  if (session.state === 'exhausted') {
    return `${head}<p class="status done">Queue exhausted — nothing left to review.</p>`;
  }
  if (session.state === 'error') {
    return (
      `${head}<div class="banner error">Could not reach the review service: ` +
      `${escapeHtml(session.lastError ?? 'unknown error')} ` +
      `<button data-retry="1">retry</button></div>`
    );
  }

  const sample = session.sample as Sample;
  const banner = session.lastError
    ? `<div class="banner error">${escapeHtml(session.lastError)} <button data-retry="1">retry</button></div>`
    : '';
  const verdict = session.verdict;
  const meta =
    `<div class="meta">` +
    `<span class="pill">${sample.smell}</span>` +
    `<span class="pill">${sample.origin}</span>` +
    `<span class="pill">likelihood ${sample.likelihood}</span>` +
    `<span class="pill">id ${sample.id}</span></div>`;
  const verdictRow =
    `<div class="verdict">` +
    `<button data-verdict="POSITIVE" class="${verdict === 'POSITIVE' ? 'sel' : ''}">smelly</button>` +
    `<button data-verdict="NEGATIVE" class="${verdict === 'NEGATIVE' ? 'sel' : ''}">not smelly</button>` +
    `</div>`;
  const submit = `<button class="submit" data-submit="1" ${session.canSubmit() ? '' : 'disabled'}>submit</button>`;
  const checklist = session.checklist
    ? renderChecklist(session.checklist, session.answers, nextUnanswered(session))
    : '';
  const action = verdict === 'POSITIVE' ? renderActionArea(session) : '';
  const busy = session.state === 'submitting' ? `<p class="status">submitting…</p>` : '';
  return [head, banner, meta, renderSamplePanes(session), checklist, verdictRow, action, submit, busy].join('');
}

export function nextUnanswered(session: ReviewSession): string | null {
  for (const q of session.yesNoQuestions()) {
    if (!session.answers.has(q.id)) return q.id;
  }
  return null;
}
