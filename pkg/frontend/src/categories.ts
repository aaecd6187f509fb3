// Per-category blocking panel: one toggle per top-level category, an Apply
// button, optimistic UI with rollback when the API rejects the change.

import { ApiClient } from './api';
import { clear, el, toast } from './dom';

export class CategoryPanel {
  private taxonomy: string[] = [];
  private applied = new Set<string>();
  private pending = new Set<string>();

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  async load(): Promise<void> {
    const [taxonomy, blocked] = await Promise.all([
      this.api.taxonomy(),
      this.api.blockedCategories(),
    ]);
    this.taxonomy = taxonomy.topCategories;
    this.applied = new Set(blocked);
    this.pending = new Set(blocked);
    this.render();
  }

  get pendingCategories(): string[] {
    return [...this.pending].sort();
  }

  render(): void {
    clear(this.root);
    const list = el('div', { class: 'category-grid' });
    for (const category of this.taxonomy) {
      const input = el('input', { type: 'checkbox', 'data-category': category });
      input.checked = this.pending.has(category);
      input.addEventListener('change', () => {
        if (input.checked) {
          this.pending.add(category);
        } else {
          this.pending.delete(category);
        }
        this.updateDirtyState();
      });
      list.append(el('label', { class: 'category-toggle' }, [input, category]));
    }
    const apply = el('button', { id: 'apply-categories', disabled: '' }, ['Apply']);
    apply.addEventListener('click', () => void this.apply());
    this.root.append(
      el('p', { class: 'hint' }, [
        'Trackers are blocked only on pages in the checked categories.',
      ]),
      list,
      apply,
    );
    this.updateDirtyState();
  }

  private updateDirtyState(): void {
    const apply = this.root.querySelector<HTMLButtonElement>('#apply-categories');
    if (apply) {
      apply.disabled = this.setsEqual(this.pending, this.applied);
    }
  }

  private setsEqual(a: Set<string>, b: Set<string>): boolean {
    return a.size === b.size && [...a].every((x) => b.has(x));
  }

  async apply(): Promise<void> {
    if (this.setsEqual(this.pending, this.applied)) {
      return; // nothing toggled: Apply is a no-op
    }
    const previous = new Set(this.applied);
    this.applied = new Set(this.pending); // optimistic
    this.updateDirtyState();
    try {
      const confirmed = await this.api.setBlockedCategories([...this.pending].sort());
      this.applied = new Set(confirmed);
      this.pending = new Set(confirmed);
      toast(`Blocking ${confirmed.length} categories`);
    } catch (err) {
      this.applied = previous;
      this.pending = new Set(previous);
      toast(`Could not apply: ${err instanceof Error ? err.message : err}`, 'error');
    }
    this.render();
  }
}
