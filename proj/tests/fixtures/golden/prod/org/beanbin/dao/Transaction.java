/*
 * Copyright 2026 The eagertest Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

package org.beanbin.dao;

import java.util.ArrayList;
import java.util.List;

public class Transaction {
    private final BeanBinDAO dao;
    private final Class<?> type;
    private final List<Command> commands = new ArrayList<Command>();

    public Transaction(BeanBinDAO dao, Class<?> type) {
        this.dao = dao;
        this.type = type;
    }

    public void addCommand(Command command) {
        commands.add(command);
    }

    public void commit() {
        for (Command command : commands) {
            command.execute(dao);
        }
        commands.clear();
    }
}
